"""Builders for the named graph families.

Vertex numbering is part of each builder's contract; tests and fuzz logs rely on it.
"""

from core._compat import StrEnum

from django.core.exceptions import ValidationError

from core.analysis.small_values import classify_small
from core.analysis.trees import classify_tree
from core.analysis.types import Classification
from core.graphs.graph import Graph
from core.graphs.operators import attach_pendants, cartesian_product, disjoint_union, join
from core.graphs.structure import bfs_distances, has_isolated_vertex, is_tree, leaves, universal_vertices

# Point-line incidence graph of the Fano plane: line j (vertex 7 + j) holds points j, j+1, j+3 mod 7.
HEAWOOD_EDGES = tuple((point, 7 + line) for line in range(7) for point in ((line, (line + 1) % 7, (line + 3) % 7)))

PETERSEN_EDGES = (
    *((i, (i + 1) % 5) for i in range(5)),
    *((i, i + 5) for i in range(5)),
    *((5 + i, 5 + (i + 2) % 5) for i in range(5)),
)


class ThetaVariant(StrEnum):
    K2BAR_JOIN = "K2bar_join"
    K1_JOIN_K1_PLUS_H = "K1_join_K1_plus_H"
    P3 = "P3"


class OmegaVariant(StrEnum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    O4 = "O4"
    O5 = "O5"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message, code="range")


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def double_star(p: int, q: int) -> Graph:
    """Centres 0 and 1, then p leaves on 0, then q leaves on 1."""
    _require(p >= 1 and q >= 1, f"double star needs p, q >= 1, got {p}, {q}")
    return family_T1(p, q, 0)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete bipartite graph needs a, b >= 1, got {a}, {b}")
    return join(Graph.empty(a), Graph.empty(b))


def heawood() -> Graph:
    return Graph.from_edges(14, HEAWOOD_EDGES)


def petersen() -> Graph:
    return Graph.from_edges(10, PETERSEN_EDGES)


def h_n(n: int) -> Graph:
    """K_n minus the perfect matching {(2i, 2i+1)}."""
    _require(n >= 4 and n % 2 == 0, f"h_n needs an even n >= 4, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2))


def hamming(p: int) -> Graph:
    """K_p □ K_p."""
    _require(p >= 2, f"hamming needs p >= 2, got {p}")
    return cartesian_product(complete(p), complete(p))


def sharpness_H(s: int, p: int, q: int) -> Graph:  # noqa: N802
    """Cycle of (p+q)s vertices cut into blocks of s.

    x_i (i < p) sees block i; y_j and z_j (j < q) both see block p + j. Numbering: cycle,
    then the x's, then the y's, then the z's.
    """
    _require(s >= 4 and p >= 1 and q >= 1, f"sharpness_H needs s >= 4, p >= 1, q >= 1, got {s}, {p}, {q}")
    t = (p + q) * s
    edges = [(v, (v + 1) % t) for v in range(t)]
    for i in range(p):
        edges.extend((t + i, i * s + k) for k in range(s))
    for j in range(q):
        block = (p + j) * s
        y, z = t + p + j, t + p + q + j
        edges.extend((y, block + k) for k in range(s))
        edges.extend((z, block + k) for k in range(s))
    return Graph.from_edges(t + p + 2 * q, edges)


def sharpness_H_prime(h: Graph) -> Graph:  # noqa: N802
    """Two pendant vertices on every vertex of `h`; reaches gamma_rdR = n + gamma."""
    _require(h.n >= 2, "sharpness_H_prime needs a graph with at least two vertices")
    if has_isolated_vertex(h, h.all_mask):
        raise ValidationError("sharpness_H_prime needs a graph without isolated vertices", code="precondition")
    return attach_pendants(h, dict.fromkeys(range(h.n), 2))


def hardness_gadget(g: Graph) -> Graph:
    """Attach to every v_i a copy of K_{2,4} + c_i d_i + e_i f_i, joined to v_i through a_i and f_i.

    g keeps 0..n-1; gadget i occupies n + 6i .. n + 6i + 5 as a, b, c, d, e, f.
    """
    _require(g.n >= 1, "hardness gadget needs a graph with at least one vertex")
    edges = list(g.edges())
    for v in range(g.n):
        a, b, c, d, e, f = range(g.n + 6 * v, g.n + 6 * v + 6)
        edges.extend((hub, leaf) for hub in (a, b) for leaf in (c, d, e, f))
        edges.extend(((c, d), (e, f), (v, a), (v, f)))
    return Graph.from_edges(7 * g.n, edges)


def family_T1(p: int, q: int, subdivisions: int = 0) -> Graph:  # noqa: N802
    """Double star S_{p,q} with its centre edge subdivided 0..2 times.

    u = 0, v = 1, subdivision vertices next, then p leaves on u, then q leaves on v.
    """
    _require(p >= 1 and q >= 1, f"T1 needs p, q >= 1, got {p}, {q}")
    _require(subdivisions in (0, 1, 2), f"T1 allows 0, 1 or 2 subdivisions, got {subdivisions}")
    spine = [0, *range(2, 2 + subdivisions), 1]
    edges = list(zip(spine, spine[1:]))
    first_leaf = 2 + subdivisions
    edges.extend((0, leaf) for leaf in range(first_leaf, first_leaf + p))
    edges.extend((1, leaf) for leaf in range(first_leaf + p, first_leaf + p + q))
    return Graph.from_edges(first_leaf + p + q, edges)


def t2_attachment_targets(skeleton: Graph) -> tuple[int, ...]:
    """Vertices of a valid skeleton that may receive new pendants.

    Measured from the first leaf x: leaves of strong support vertices and non-leaves at distance
    divisible by 3 from x. These are the vertices carrying 2 or 3 in the weight n+2 labeling
    built from x; x itself is marked too when its support is weak.
    """
    _check_t2_skeleton(skeleton)
    leaf_set = leaves(skeleton)
    x = leaf_set.members[0]
    distances = bfs_distances(skeleton, x)
    strong = {v for v in leaf_set if (skeleton.masks[skeleton.adjacency[v][0]] & leaf_set.mask).bit_count() == 2}
    marked = []
    for v in range(skeleton.n):
        if v in leaf_set:
            if v in strong or distances[v] % 3 == 0:
                marked.append(v)
        elif distances[v] % 3 == 0:
            marked.append(v)
    return tuple(marked)


def _check_t2_skeleton(skeleton: Graph) -> None:
    if not is_tree(skeleton) or skeleton.n < 4:
        raise ValidationError("T2 skeleton must be a tree with at least four vertices", code="precondition")
    leaf_set = leaves(skeleton)
    support = {v: skeleton.adjacency[v][0] for v in leaf_set}
    for s in set(support.values()):
        if (skeleton.masks[s] & leaf_set.mask).bit_count() > 2:
            raise ValidationError(f"support vertex {s} carries more than two leaves", code="precondition")
    for v in leaf_set:
        distances = bfs_distances(skeleton, v)
        for u in leaf_set:
            if support[u] != support[v] and distances[u] % 3:
                raise ValidationError(
                    f"leaves {v} and {u} have distinct supports at distance {distances[u]}, not a multiple of 3",
                    code="precondition",
                )


def family_T2(skeleton: Graph, attach_counts: dict[int, int] | None = None) -> Graph:  # noqa: N802
    """Skeleton plus `attach_counts[v]` new leaves on each eligible target v.

    The result must be recognized as a member of the n + 2 tree families, otherwise the call
    is rejected.
    """
    attach_counts = {v: count for v, count in (attach_counts or {}).items() if count}
    eligible = set(t2_attachment_targets(skeleton))
    for v in attach_counts:
        if v not in eligible:
            raise ValidationError(f"vertex {v} is not an eligible attachment target", code="precondition")
    tree = attach_pendants(skeleton, attach_counts)
    if classify_tree(tree).classification not in (Classification.TREE_T1, Classification.TREE_T2):
        raise ValidationError("attachment produced a tree outside the n + 2 families", code="degenerate")
    return tree


def _check_theta_h(h: Graph) -> None:
    if h.n < 2 or has_isolated_vertex(h, h.all_mask):
        raise ValidationError("H must be non-empty without isolated vertices", code="precondition")


def family_theta(variant: ThetaVariant | str, h: Graph | None = None) -> Graph:
    """Members of the value-4 families. Joins keep the small side first.

    K2bar_join: 0, 1 are the independent pair, H follows.
    K1_join_K1_plus_H: 0 is the universal vertex, 1 the pendant-like vertex, H follows.
    """
    variant = ThetaVariant(variant)
    if variant is ThetaVariant.P3:
        graph = path(3)
    else:
        if h is None:
            raise ValidationError(f"variant {variant} needs a graph H", code="precondition")
        _check_theta_h(h)
        if variant is ThetaVariant.K2BAR_JOIN:
            graph = join(Graph.empty(2), h)
        else:
            graph = join(Graph.empty(1), disjoint_union(Graph.empty(1), h))
    if classify_small(graph).classification is not Classification.RDRD_4_THETA:
        raise ValidationError(f"{variant} on this H has a restrained double Roman value below 4", code="degenerate")
    return graph


def family_omega(
    variant: OmegaVariant | str,
    h: Graph,
    *,
    targets: tuple[int, ...] = (),
    i: int | None = None,
) -> Graph:
    """Members of the value-5 families; H keeps 0..k-1 and the added vertices follow.

    O1-O3: x = k and y = k+1 see all of H, z = k+2 hangs on x. O2 joins z to `targets`
    (non-universal vertices of H), O3 joins z to y.
    O4: x = k sees all of H plus the pendants a = k+1 and b = k+2.
    O5: x = k sees all of H, y = k+1 sees the first `i` vertices of H.
    """
    variant = OmegaVariant(variant)
    _check_theta_h(h)
    k = h.n
    edges = list(h.edges())
    if variant in (OmegaVariant.O1, OmegaVariant.O2, OmegaVariant.O3):
        x, y, z = k, k + 1, k + 2
        edges.extend((x, v) for v in range(k))
        edges.extend((y, v) for v in range(k))
        edges.append((x, z))
        if variant is OmegaVariant.O2:
            allowed = set(range(k)) - set(universal_vertices(h))
            if not targets or not set(targets) <= allowed:
                raise ValidationError("O2 targets must be a non-empty set of non-universal vertices of H", code="precondition")
            edges.extend((z, v) for v in sorted(set(targets)))
        elif variant is OmegaVariant.O3:
            edges.append((y, z))
        order = k + 3
    elif variant is OmegaVariant.O4:
        x = k
        edges.extend((x, v) for v in range(k + 3) if v != x)
        order = k + 3
    else:
        if i is None or not 1 <= i <= k - 1:
            raise ValidationError(f"O5 needs 1 <= i <= {k - 1}, got {i}", code="precondition")
        x, y = k, k + 1
        edges.extend((x, v) for v in range(k))
        edges.extend((y, v) for v in range(i))
        order = k + 2
    graph = Graph.from_edges(order, edges)
    if classify_small(graph).classification is not Classification.RDRD_5_OMEGA:
        raise ValidationError(f"{variant} on this H has a restrained double Roman value below 5", code="degenerate")
    return graph
