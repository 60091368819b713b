"""Seeded constructors of harmonic morphisms in every category.

The workhorse is :func:`transport_morphism`. It fixes a target graph and a
degree, splits the degree over each target vertex fiber into horizontal
multiplicities, and for each target edge fills a random non-negative integer
matrix whose row and column sums are those multiplicities. Each entry
becomes source edges whose local degrees add up to it, which makes the map
harmonic by construction. Vertical edges, contracted pendant pieces and
weights are layered on top.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import asdict, dataclass
from fractions import Fraction

from .complexes import (
    AbstractCurve,
    ComplexMorphism,
    CurveCover,
    MetrizedComplex,
    validate_harmonic_complex,
)
from .divisors import Divisor
from .errors import BudgetExceeded, InvalidMorphism, NotACutVertex, TargetTooSmall, UnknownCategory
from .graph import EdgeId, Multigraph, VertexId, connected_components
from .metric import MetricModel, WeightedMetricGraph
from .morphisms import (
    CATEGORIES,
    COMPLEX,
    FINITE,
    METRIC,
    WEIGHTED,
    WEIGHTED_METRIC,
    GraphMorphism,
    IndexedMorphism,
    MetricMorphism,
    WeightedMetricMorphism,
    certify,
    compose,
    identity_graph_morphism,
)
from .weighted import WeightedGraph


@dataclass(frozen=True)
class GenSpec:
    """Size bounds and seed for :func:`random_instance`.

    ``max_vertices`` bounds the target graph. ``nondegenerate`` forbids
    contracted pieces so every source vertex has positive multiplicity.
    """

    category: str
    seed: int = 0
    max_vertices: int = 5
    max_degree: int = 3
    max_extra_edges: int = 3
    max_weight: int = 2
    max_genus: int = 3
    harmonic: bool = True
    nondegenerate: bool = False

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise UnknownCategory(f"unknown category {self.category!r}")
        for name in ("max_vertices", "max_degree", "max_genus"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for name in ("max_extra_edges", "max_weight"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def as_dict(self) -> dict:
        return asdict(self)


# -- small random pieces -----------------------------------------------------


def random_graph(
    rng: random.Random,
    n: int,
    extra_edges: int,
    *,
    loops: bool = False,
    vprefix: str = "v",
    eprefix: str = "e",
) -> Multigraph:
    """Connected multigraph: a random tree on n vertices plus extra edges."""
    vs = [f"{vprefix}{i}" for i in range(n)]
    edges: dict[EdgeId, tuple[VertexId, VertexId]] = {}
    for i in range(1, n):
        edges[f"{eprefix}{len(edges)}"] = (vs[rng.randrange(i)], vs[i])
    for _ in range(extra_edges):
        if n == 1 and not loops:
            break
        a = rng.choice(vs)
        if loops and rng.random() < 0.25:
            b = a
        else:
            if n == 1:
                continue
            b = rng.choice([x for x in vs if x != a])
        edges[f"{eprefix}{len(edges)}"] = (a, b)
    return Multigraph(vs, edges)


def _composition(rng: random.Random, total: int, max_parts: int | None = None) -> list[int]:
    """Random ordered split of ``total`` into positive parts."""
    if total <= 0:
        return []
    cuts = sorted(rng.sample(range(1, total), rng.randint(0, total - 1)))
    parts = [b - a for a, b in zip([0, *cuts], [*cuts, total])]
    if max_parts is not None:
        while len(parts) > max_parts:
            parts[-2] += parts.pop()
    return parts


def _transport(rng: random.Random, rows: Sequence[int], cols: Sequence[int]) -> list[list[int]]:
    """Random non-negative integer matrix with the given row and column sums."""
    r, c = list(rows), list(cols)
    mat = [[0] * len(c) for _ in r]
    cells = [(i, j) for i in range(len(r)) for j in range(len(c))]
    rng.shuffle(cells)
    for i, j in cells:
        x = rng.randint(0, min(r[i], c[j]))
        mat[i][j] += x
        r[i] -= x
        c[j] -= x
    i = j = 0
    while i < len(r) and j < len(c):
        x = min(r[i], c[j])
        mat[i][j] += x
        r[i] -= x
        c[j] -= x
        if r[i] == 0:
            i += 1
        if j < len(c) and c[j] == 0:
            j += 1
    return mat


def _length(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.choice((1, 1, 2, 3)))


@dataclass
class _Draft:
    """Mutable morphism under construction; ``local_deg`` maps each source edge to its local degree."""

    src_vertices: list[VertexId]
    src_edges: dict[EdgeId, tuple[VertexId, VertexId]]
    vmap: dict[VertexId, VertexId]
    emap: dict[EdgeId, str]
    local_deg: dict[EdgeId, int]
    target: Multigraph

    def add_vertex(self, image: VertexId) -> VertexId:
        v = f"s{len(self.src_vertices)}"
        while v in self.vmap:
            v += "'"
        self.src_vertices.append(v)
        self.vmap[v] = image
        return v

    def add_edge(self, a: VertexId, b: VertexId, image: str, local_deg: int) -> EdgeId:
        e = f"e{len(self.src_edges)}"
        while e in self.src_edges:
            e += "'"
        self.src_edges[e] = (a, b)
        self.emap[e] = image
        self.local_deg[e] = local_deg
        return e

    def fiber(self, v2: VertexId) -> list[VertexId]:
        return [v for v in self.src_vertices if self.vmap[v] == v2]


def _restrict_to_component(d: _Draft, keep: Iterable[VertexId]) -> None:
    keep = set(keep)
    d.src_vertices = [v for v in d.src_vertices if v in keep]
    for e in [e for e, (a, _) in d.src_edges.items() if a not in keep]:
        del d.src_edges[e], d.emap[e], d.local_deg[e]
    d.vmap = {v: x for v, x in d.vmap.items() if v in keep}


def _draft_transport(
    rng: random.Random, target: Multigraph, degree: int, category: str, *, split_edges: bool
) -> _Draft:
    d = _Draft([], {}, {}, {}, {}, target)
    if not target.edges:
        for _ in range(rng.randint(1, 3)):
            d.add_vertex(target.vertices[0])
        return d
    fibers: dict[VertexId, list[tuple[VertexId, int]]] = {}
    for v2 in target.vertices:
        fibers[v2] = [(d.add_vertex(v2), m) for m in _composition(rng, degree, max_parts=4)]
    for e2, (a2, b2) in target.edges.items():
        if a2 == b2:
            # a loop: pair up 2M half-edges at each fiber vertex at random
            halves = [v for v, m in fibers[a2] for _ in range(2 * m)]
            rng.shuffle(halves)
            for k in range(0, len(halves), 2):
                d.add_edge(halves[k], halves[k + 1], e2, 1)
            continue
        rows, cols = fibers[a2], fibers[b2]
        mat = _transport(rng, [m for _, m in rows], [m for _, m in cols])
        for (x, _), row in zip(rows, mat):
            for (y, _), n in zip(cols, row):
                if n == 0:
                    continue
                if category == FINITE:
                    parts = [1] * n
                elif split_edges:
                    parts = _composition(rng, n, max_parts=3)
                else:
                    parts = [n]
                for local_deg in parts:
                    d.add_edge(x, y, e2, local_deg)
    return d


def _connect(rng: random.Random, d: _Draft) -> None:
    """Join components by vertical edges inside a shared fiber, or keep one."""
    comps = connected_components(d.src_vertices, d.src_edges)
    if len(comps) == 1:
        return
    if rng.random() < 0.3:
        _restrict_to_component(d, rng.choice(comps))
        return
    merged = set(comps[0])
    for comp in comps[1:]:
        y = rng.choice(comp)
        xs = [x for x in merged if d.vmap[x] == d.vmap[y]]
        x = rng.choice(sorted(xs))
        d.add_edge(x, y, d.vmap[y], 0)
        merged |= set(comp)


def _add_vertical(rng: random.Random, d: _Draft, count: int, loops: bool) -> None:
    for _ in range(count):
        v2 = rng.choice(d.target.vertices)
        fib = d.fiber(v2)
        if not fib:
            continue
        if len(fib) == 1 or (loops and rng.random() < 0.3):
            if not loops:
                continue
            x = y = rng.choice(fib)
        else:
            x, y = rng.sample(fib, 2)
        d.add_edge(x, y, v2, 0)


def _add_collapsed(rng: random.Random, d: _Draft, count: int) -> None:
    """Attach small pieces contracted onto the image of their attachment vertex."""
    for _ in range(count):
        x = rng.choice(d.src_vertices)
        v2 = d.vmap[x]
        z = d.add_vertex(v2)
        d.add_edge(x, z, v2, 0)
        if rng.random() < 0.4:
            z2 = d.add_vertex(v2)
            d.add_edge(z, z2, v2, 0)
            if rng.random() < 0.5:
                d.add_edge(z2, x, v2, 0)


# -- realizing a draft in each category --------------------------------------


def _raise_weights(m, src_weights: dict[VertexId, int], rebuild) -> object:
    """Increase source weights until every vertex has non-negative slack."""
    cert = certify(m, require_slack=False)
    for v, s in cert.slack.items():
        if s < 0:
            src_weights[v] = src_weights.get(v, 0) + (-s + 1) // 2
    return rebuild(src_weights)


def _realize(
    rng: random.Random,
    category: str,
    d: _Draft,
    spec: GenSpec,
    target_lengths: Mapping[EdgeId, Fraction] | None = None,
    target_weights: Mapping[VertexId, int] | None = None,
):
    src = Multigraph(d.src_vertices, d.src_edges)
    tgt = d.target
    if category == FINITE:
        return GraphMorphism(src, tgt, d.vmap, d.emap)
    if target_weights is None:
        target_weights = {v: rng.randint(0, spec.max_weight) for v in tgt.vertices}
    src_weights = {v: rng.randint(0, spec.max_weight) for v in src.vertices}
    weighted = category in (WEIGHTED, WEIGHTED_METRIC, COMPLEX)
    if category == WEIGHTED:
        tw = WeightedGraph(tgt, target_weights)

        def rebuild(sw):
            return IndexedMorphism(WeightedGraph(src, sw), tw, d.vmap, d.emap, d.local_deg)

    else:
        if target_lengths is None:
            target_lengths = {e: _length(rng) for e in tgt.edges}
        lengths = {
            e: (target_lengths[d.emap[e]] / d.local_deg[e] if d.local_deg[e] else _length(rng)) for e in src.edges
        }
        tmodel = MetricModel(tgt, target_lengths)
        smodel = MetricModel(src, lengths)
        if category == METRIC:
            return MetricMorphism(smodel, tmodel, d.vmap, d.emap)
        twm = WeightedMetricGraph(tmodel, target_weights)

        def rebuild(sw):
            return WeightedMetricMorphism(WeightedMetricGraph(smodel, sw), twm, d.vmap, d.emap)

    m = rebuild(src_weights)
    if weighted and spec.harmonic:
        m = _raise_weights(m, src_weights, rebuild)
    if category == COMPLEX:
        return decorate_complex(rng, m, spec.max_genus)
    return m


def _curve_points(g: Multigraph, v: VertexId) -> tuple[list[str], dict[EdgeId, str]]:
    red = {e: f"x:{v}:{e}" for e in g.incident_edges(v)}
    return [*red.values(), f"pt:{v}"], red


def decorate_complex(rng: random.Random, m: WeightedMetricMorphism, max_genus: int = 3) -> ComplexMorphism:
    """Attach curves and covers to a harmonic weighted-metric morphism.

    Each edge's curve point over a target edge point is mapped with
    ramification index equal to the slope. Source genera are chosen as small
    as the curve-level Riemann-Hurwitz bound permits (plus a random bump when
    the cover has degree above one).
    """
    cert = certify(m, require_slack=False)
    mult = cert.multiplicity
    base = m.base
    tg, sg = base.target, base.source
    tgt_curves, tgt_red = {}, {}
    for v2 in tg.vertices:
        pts, red = _curve_points(tg, v2)
        genus = rng.randint(0, max_genus)
        rep = None
        if rng.random() < 0.5:
            anchor = sorted(red.values())[0] if red else f"pt:{v2}"
            rep = Divisor({anchor: 2 * genus - 2})
        tgt_curves[v2] = AbstractCurve(genus, pts, rep)
        tgt_red[v2] = red
    src_curves, src_red, covers = {}, {}, {}
    for v in sg.vertices:
        pts, red = _curve_points(sg, v)
        v2 = base.vertex_map[v]
        M = mult[v]
        if M > 0:
            point_map = {}
            ram = {}
            for e, x in red.items():
                if base.is_horizontal(e):
                    point_map[x] = tgt_red[v2][base.edge_map[e]]
                    ram[x] = m.slope(e)
            covers[v] = CurveCover(M, point_map, ram)
            need = M * (2 * tgt_curves[v2].genus - 2) + sum(k - 1 for k in ram.values())
            genus = max(0, -(-(need + 2) // 2))
            if M > 1:
                genus += rng.randint(0, 1)
        else:
            genus = rng.randint(0, max_genus)
        rep = Divisor({f"pt:{v}": 2 * genus - 2}) if rng.random() < 0.5 else None
        src_curves[v] = AbstractCurve(genus, pts, rep)
        src_red[v] = red
    source = MetrizedComplex(m.source, src_curves, src_red)
    target = MetrizedComplex(m.target, tgt_curves, tgt_red)
    return ComplexMorphism(source, target, base.vertex_map, base.edge_map, covers)


# -- named constructions -----------------------------------------------------


def identity_morphism(x):
    """Identity in the category of ``x``: local degrees 1, covers of degree 1."""
    if isinstance(x, Multigraph):
        return identity_graph_morphism(x)
    if isinstance(x, WeightedGraph):
        g = x.graph
        return IndexedMorphism(x, x, {v: v for v in g.vertices}, {e: e for e in g.edges}, {e: 1 for e in g.edges})
    if isinstance(x, MetricModel):
        g = x.graph
        return MetricMorphism(x, x, {v: v for v in g.vertices}, {e: e for e in g.edges})
    if isinstance(x, WeightedMetricGraph):
        g = x.graph
        return WeightedMetricMorphism(x, x, {v: v for v in g.vertices}, {e: e for e in g.edges})
    if isinstance(x, MetrizedComplex):
        g = x.graph
        covers = {
            v: CurveCover(1, {p: p for p in x.curves[v].points}, {p: 1 for p in x.curves[v].points})
            for v in g.vertices
        }
        return ComplexMorphism(x, x, {v: v for v in g.vertices}, {e: e for e in g.edges}, covers)
    raise UnknownCategory(f"no identity for {type(x).__name__}")


def collapsing_morphism(g: Multigraph, cut_vertex: VertexId, side: Iterable[VertexId]) -> GraphMorphism:
    """Contract ``side`` together with ``cut_vertex`` onto ``cut_vertex``.

    ``side`` must be a union of components of the graph with ``cut_vertex``
    removed; everything else maps identically onto the induced subgraph on
    the other side. Loops at the cut vertex stay on the other side.

    Raises:
        NotACutVertex: ``side`` is empty or not such a union.
        TargetTooSmall: the other side would be ``cut_vertex`` alone.
    """
    side = set(side)
    if not g.has_vertex(cut_vertex) or cut_vertex in side or not side:
        raise NotACutVertex(f"{cut_vertex!r} with side {sorted(side)} does not describe a cut")
    for v in side:
        if not g.has_vertex(v):
            raise NotACutVertex(f"{v!r} is not a vertex")
    rest = [v for v in g.vertices if v != cut_vertex]
    rest_edges = {e: ab for e, ab in g.edges.items() if cut_vertex not in ab}
    comps = connected_components(rest, rest_edges)
    union = set()
    for comp in comps:
        if side & set(comp):
            if not set(comp) <= side:
                raise NotACutVertex(f"side {sorted(side)} splits a component of the graph minus {cut_vertex!r}")
            union |= set(comp)
    if union == set(rest):
        raise TargetTooSmall(f"contracting {sorted(side)} leaves only {cut_vertex!r} on the other side")
    keep = [v for v in g.vertices if v not in side]
    tgt_edges = {e: ab for e, ab in g.edges.items() if not (set(ab) & side)}
    target = Multigraph(keep, tgt_edges)
    vmap = {v: (cut_vertex if v in side else v) for v in g.vertices}
    emap = {e: (e if e in tgt_edges else cut_vertex) for e in g.edges}
    return GraphMorphism(g, target, vmap, emap)


def permutation_cover(
    base: Multigraph,
    d: int,
    assignment: Mapping[EdgeId, Sequence[int]] | None = None,
    seed: int = 0,
) -> GraphMorphism:
    """Derived cover: vertex v lifts to v#1..v#d, edge e to e#i joining u#i to w#p(i).

    ``assignment`` gives each edge a permutation of 1..d as a sequence; edges
    left out get a random one drawn from ``seed``. A disconnected cover is
    cut down to the component containing the lift #1 of the least vertex.
    """
    if d < 1:
        raise ValueError("cover degree must be positive")
    rng = random.Random(seed)
    perms = {}
    for e in base.edges:
        if assignment is not None and e in assignment:
            p = list(assignment[e])
            if sorted(p) != list(range(1, d + 1)):
                raise InvalidMorphism(f"assignment of {e!r} is not a permutation of 1..{d}")
        else:
            p = list(range(1, d + 1))
            rng.shuffle(p)
        perms[e] = p
    vs = [f"{v}#{i}" for v in base.vertices for i in range(1, d + 1)]
    edges = {}
    for e, (a, b) in base.edges.items():
        for i in range(1, d + 1):
            edges[f"{e}#{i}"] = (f"{a}#{i}", f"{b}#{perms[e][i - 1]}")
    comps = connected_components(vs, edges)
    start = f"{base.vertices[0]}#1"
    comp = next(set(c) for c in comps if start in c)
    vs = [v for v in vs if v in comp]
    edges = {e: ab for e, ab in edges.items() if ab[0] in comp}
    src = Multigraph(vs, edges)
    vmap = {v: v.rsplit("#", 1)[0] for v in vs}
    emap = {e: e.rsplit("#", 1)[0] for e in edges}
    return GraphMorphism(src, base, vmap, emap)


def metric_stretch(base: MetricModel, k: int) -> MetricMorphism:
    """Source is ``base`` with every length divided by k; all slopes equal k."""
    if k < 1:
        raise ValueError("stretch factor must be positive")
    g = base.graph
    src = MetricModel(g, {e: ell / k for e, ell in base.lengths.items()})
    return MetricMorphism(src, base, {v: v for v in g.vertices}, {e: e for e in g.edges})


def transport_morphism(
    rng: random.Random,
    target: Multigraph,
    degree: int,
    category: str = FINITE,
    *,
    vertical: int = 0,
    collapsed: int = 0,
    split_edges: bool = True,
) -> _Draft:
    """Draft of a harmonic map onto ``target``; see the module docstring."""
    d = _draft_transport(rng, target, degree, category, split_edges=split_edges)
    _connect(rng, d)
    _add_vertical(rng, d, vertical, loops=category == FINITE)
    if target.edges:
        _add_collapsed(rng, d, collapsed)
    return d


def _draft_from_morphism(m: GraphMorphism) -> _Draft:
    local_deg = {e: (0 if m.is_vertical(e) else 1) for e in m.source.edges}
    return _Draft(list(m.source.vertices), dict(m.source.edges), dict(m.vertex_map), dict(m.edge_map), local_deg, m.target)


def random_instance(spec: GenSpec):
    """Deterministic (source object, harmonic morphism) for ``spec``.

    Raises:
        BudgetExceeded: 1000 attempts failed to pass the category validator.
    """
    rng = random.Random(spec.seed)
    for _ in range(1000):
        m = _attempt(rng, spec)
        if m is None:
            continue
        if _valid(m, spec):
            return m.source, m
    raise BudgetExceeded(f"no valid instance for {spec}")


def _valid(m, spec: GenSpec) -> bool:
    if isinstance(m, ComplexMorphism):
        cc = validate_harmonic_complex(m)
        ok, cert = cc.valid, cc.skeleton
    else:
        cert = certify(m) if spec.harmonic else certify(m, require_slack=False)
        ok = cert.harmonic if spec.harmonic else cert.pseudo_harmonic
    if not ok:
        return False
    if spec.nondegenerate:
        return bool(cert.degree) and all(x > 0 for x in cert.multiplicity.values())
    return True


def _attempt(rng: random.Random, spec: GenSpec):
    cat = spec.category
    loops = cat == FINITE
    n = rng.randint(1 if not spec.nondegenerate else 2, spec.max_vertices)
    target = random_graph(rng, n, rng.randint(0, spec.max_extra_edges), loops=loops, vprefix="t", eprefix="f")
    kinds = ["transport"] * 6 + ["identity", "cover", "composite"]
    if not spec.nondegenerate:
        kinds.append("collapse")
    if cat in (METRIC, WEIGHTED_METRIC, COMPLEX):
        kinds.append("stretch")
    kind = rng.choice(kinds)
    collapsed = 0 if spec.nondegenerate or rng.random() < 0.5 else rng.randint(1, 2)
    vertical = rng.randint(0, 2)
    if kind == "identity":
        d = _draft_from_morphism(identity_graph_morphism(target))
    elif kind == "cover":
        deg = rng.randint(1, spec.max_degree)
        d = _draft_from_morphism(permutation_cover(target, deg, seed=rng.randrange(2**32)))
    elif kind == "collapse":
        d = _collapse_draft(rng, spec, loops)
        if d is None:
            return None
    elif kind == "stretch":
        d = _draft_from_morphism(identity_graph_morphism(target))
        k = rng.randint(1, spec.max_degree)
        d.local_deg = {e: k for e in d.local_deg}
    elif kind == "composite":
        return _composite(rng, spec, target)
    else:
        deg = rng.randint(1, spec.max_degree)
        d = transport_morphism(rng, target, deg, cat, vertical=vertical, collapsed=collapsed)
    return _realize(rng, cat, d, spec)


def _collapse_draft(rng: random.Random, spec: GenSpec, loops: bool) -> _Draft | None:
    n2 = rng.randint(2, max(2, spec.max_vertices))
    g2 = random_graph(rng, n2, rng.randint(0, spec.max_extra_edges), loops=loops, vprefix="a", eprefix="f")
    n1 = rng.randint(1, 3)
    g1 = random_graph(rng, n1 + 1, rng.randint(0, 2), loops=False, vprefix="b", eprefix="h")
    cut = rng.choice(g2.vertices)
    rename = {"b0": cut}
    vs = list(g2.vertices) + [v for v in g1.vertices if v != "b0"]
    edges = dict(g2.edges)
    for e, (a, b) in g1.edges.items():
        edges[e] = (rename.get(a, a), rename.get(b, b))
    g = Multigraph(vs, edges)
    m = collapsing_morphism(g, cut, [v for v in g1.vertices if v != "b0"])
    return _draft_from_morphism(m)


def _composite(rng: random.Random, spec: GenSpec, target: Multigraph):
    cat = spec.category
    # the first map only needs to be pseudo-harmonic; weights are fixed at the end
    inner = GenSpec(**{**spec.as_dict(), "harmonic": False})
    # degrees multiply under composition, so keep the product within max_degree
    outer_deg = rng.randint(1, min(2, spec.max_degree))
    inner_deg = rng.randint(1, max(1, min(2, spec.max_degree // outer_deg)))
    d2 = transport_morphism(rng, target, outer_deg, cat, vertical=rng.randint(0, 1))
    d1_target = Multigraph(d2.src_vertices, d2.src_edges)
    d1 = transport_morphism(
        rng, d1_target, inner_deg, cat,
        collapsed=0 if spec.nondegenerate else rng.randint(0, 1),
    )
    if cat == FINITE:
        outer = _realize(rng, cat, d2, inner)
        first = _realize(rng, cat, d1, inner)
        return compose(outer, first)
    # compose at the graph level, then realize once so weights and lengths fit
    g2 = GraphMorphism(d1_target, target, d2.vmap, d2.emap)
    g1 = GraphMorphism(Multigraph(d1.src_vertices, d1.src_edges), d1_target, d1.vmap, d1.emap)
    gc = compose(g2, g1)
    local_deg = {}
    for e, x in g1.edge_map.items():
        local_deg[e] = d1.local_deg[e] * d2.local_deg[x] if g1.is_horizontal(e) else 0
    for e in gc.source.edges:
        if gc.is_vertical(e):
            local_deg[e] = 0
    d = _Draft(list(gc.source.vertices), dict(gc.source.edges), dict(gc.vertex_map), dict(gc.edge_map), local_deg, target)
    return _realize(rng, cat, d, spec)


def random_divisor(rng: random.Random, points: Sequence[str], max_abs: int = 3, density: float = 0.5) -> Divisor[str]:
    return Divisor({p: rng.randint(-max_abs, max_abs) for p in points if rng.random() < density})
