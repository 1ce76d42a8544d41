from config.env import env

# Default node cap for the branch-and-bound solvers; `--budget` overrides it per call.
RDRD_BUDGET = env.int("RDRD_BUDGET", default=50_000_000)

# Largest order `enumerate_optimal_rdrd` accepts (4**8 labelings).
RDRD_ENUMERATION_CEILING = env.int("RDRD_ENUMERATION_CEILING", default=8)

# auto | bb | tree
RDRD_DEFAULT_ENGINE = env.str("RDRD_DEFAULT_ENGINE", default="auto")

RDRD_FUZZ_JOBS = env.int("RDRD_FUZZ_JOBS", default=1)

# local | celery
RDRD_FUZZ_BACKEND = env.str("RDRD_FUZZ_BACKEND", default="local")
