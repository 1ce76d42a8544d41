from celery import shared_task

from .fuzz import FuzzConfig, run_instance


@shared_task(name="workbench.fuzz_instance")
def fuzz_instance(config: dict, index: int) -> dict:
    return run_instance(FuzzConfig.from_dict(config), index).to_dict()
