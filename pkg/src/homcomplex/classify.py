"""Predict and verify the homotopy type of each component of Hom(G, H), H square-free."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence

from .complex import (
    DEFAULT_MAX_CELLS,
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_SIMPLICES,
    build_component_poset,
    euler_characteristic_cells,
    order_complex,
)
from .freegroup import (
    SubgroupClass,
    even_part,
    format_word,
    induced_map,
    member,
    pi1_presentation,
    stallings_classify,
)
from .graph import (
    Graph,
    bfs_distances,
    cycle_rank,
    find_square,
    is_bipartite,
    is_connected,
    is_square_free,
    is_tree,
)
from .homology import HomologyProfile, boundary_matrices, cellular_chain_complex, homology_profile
from .homs import DEFAULT_MAX_HOMS, ReconfigGraph, fold_reduce, reconfig_components
from .twocover import RealizableSubgroup, realizable_subgroup

SCHEMA_VERSION = 1


class Prediction(str, Enum):
    POINT = "Point"
    CIRCLE = "Circle"
    POINT_OR_CIRCLE = "PointOrCircle"
    TYPE_OF_H = "TypeOfH"
    DOUBLE_COVER_OF_H = "DoubleCoverOfH"


MATCH = "Match"
MISMATCH = "Mismatch"
UNDETERMINED = "Undetermined"
RESOLVED_POINT = "Resolved(Point)"
RESOLVED_CIRCLE = "Resolved(Circle)"


class InputError(ValueError):
    """Graphs outside the hypotheses of the classification."""


def base_vertex(G: Graph) -> int:
    """Smallest vertex with a neighbour other than itself."""
    for v in range(G.n):
        if G.adj[v] - {v}:
            return v
    raise InputError("G has no non-isolated vertex")


def check_inputs(G: Graph, H: Graph) -> None:
    if G.num_edges == 0 or not is_connected(G):
        raise InputError("G must be connected with at least one edge")
    if H.num_edges == 0 or not is_connected(H):
        raise InputError("H must be connected with at least one edge")
    if not H.is_simple():
        raise InputError(f"H is not square-free: looped vertex {H.loops[0]}")
    sq = find_square(H)
    if sq is not None:
        raise InputError(f"H is not square-free: contains 4-cycle ({','.join(map(str, sq))})")


def image_class(G: Graph, H: Graph, f: Sequence[int], v: Optional[int] = None) -> tuple:
    """(SubgroupClass, image words) of f_* : pi_1(G, v) -> pi_1(H, f(v))."""
    v = base_vertex(G) if v is None else v
    words = induced_map(f, pi1_presentation(G, v), pi1_presentation(H, f[v]))
    cls, _ = stallings_classify(words)
    return cls, words


def predict_from_class(cls: SubgroupClass, h_bipartite: bool) -> Prediction:
    if cls is SubgroupClass.NONABELIAN_FREE:
        return Prediction.POINT
    if cls is SubgroupClass.INFINITE_CYCLIC:
        return Prediction.POINT_OR_CIRCLE
    return Prediction.TYPE_OF_H if h_bipartite else Prediction.DOUBLE_COVER_OF_H


def predict(G: Graph, H: Graph, f: Sequence[int], v: Optional[int] = None) -> Prediction:
    check_inputs(G, H)
    cls, _ = image_class(G, H, f, v)
    return predict_from_class(cls, is_bipartite(H)[0])


def expected_b1(prediction: Prediction, chi_h: int) -> Optional[int]:
    return {
        Prediction.POINT: 0,
        Prediction.CIRCLE: 1,
        Prediction.TYPE_OF_H: 1 - chi_h,
        Prediction.DOUBLE_COVER_OF_H: 1 - 2 * chi_h,
    }.get(prediction)


def verify(prediction: Prediction, profile: HomologyProfile, chi_h: int) -> str:
    """Compare a prediction with measured homology.

    Degree 2 must be covered by the profile; every degree >= 2 must vanish.
    """
    if len(profile.betti) < 3 and profile.chi is None:
        return UNDETERMINED
    if profile.b(0) != 1 or not profile.torsion_free:
        return MISMATCH
    if any(profile.b(k) for k in range(2, len(profile.betti))):
        return MISMATCH
    b1 = profile.b(1)
    if prediction is Prediction.POINT_OR_CIRCLE:
        return {0: RESOLVED_POINT, 1: RESOLVED_CIRCLE}.get(b1, MISMATCH)
    return MATCH if b1 == expected_b1(prediction, chi_h) else MISMATCH


def settled_type(prediction: Prediction, verdict: str) -> Optional[str]:
    """Homotopy type name after verification, or None on mismatch."""
    if verdict == RESOLVED_POINT:
        return "Point"
    if verdict == RESOLVED_CIRCLE:
        return "Circle"
    if verdict == MATCH:
        return prediction.value
    return None


def trichotomy_holds(cls: SubgroupClass, pi: RealizableSubgroup) -> bool:
    """Trichotomy for Pi(f, v) given the class of the image of f_*."""
    if cls is SubgroupClass.NONABELIAN_FREE:
        return pi.rank == 0
    if cls is SubgroupClass.INFINITE_CYCLIC:
        return pi.rank <= 1
    return same_subgroup(pi.generators, even_part(pi.presentation))


def same_subgroup(a: Sequence, b: Sequence) -> bool:
    _, sa = stallings_classify(a)
    _, sb = stallings_classify(b)
    return all(member(sb, w) for w in a) and all(member(sa, w) for w in b)


@dataclass
class Classification:
    component_id: int
    representative: tuple
    size_homs: int
    cells: int
    image_class: SubgroupClass
    image_words: list
    prediction: Prediction
    profile: HomologyProfile
    chi_cells: int
    verdict: str
    pi: Optional[RealizableSubgroup] = None
    pi_consistent: Optional[bool] = None
    trichotomy_ok: Optional[bool] = None

    @property
    def settled(self) -> Optional[str]:
        return settled_type(self.prediction, self.verdict)

    def as_dict(self) -> dict:
        d = {
            "id": self.component_id,
            "representative": list(self.representative),
            "size_homs": self.size_homs,
            "cells": self.cells,
            "image_class": self.image_class.value,
            "prediction": self.prediction.value,
            "betti": list(self.profile.betti),
            "torsion": [list(t) for t in self.profile.torsion],
            "chi": self.chi_cells,
            "verdict": self.verdict,
        }
        if self.pi is not None:
            d["pi"] = {
                "rank": self.pi.rank,
                "class": self.pi.subgroup_class.value,
                "generators": [format_word(w) for w in self.pi.generators],
                "consistent_with_b1": self.pi_consistent,
                "consistent_with_image": self.trichotomy_ok,
            }
        return d


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    g_name: str
    h_name: str
    G: Graph
    H: Graph
    folded: Optional[Graph]
    components: list
    checks: list
    stats: dict = field(default_factory=dict)

    @property
    def target(self) -> Graph:
        return self.folded if self.folded is not None else self.H

    @property
    def all_match(self) -> bool:
        ok = all(c.verdict not in (MISMATCH, UNDETERMINED) for c in self.components)
        return ok and all(ch.passed for ch in self.checks)

    def as_dict(self) -> dict:
        H = self.target
        inp = {
            "g": {"name": self.g_name, "n": self.G.n, "edges": self.G.num_edges},
            "h": {"name": self.h_name, "n": self.H.n, "edges": self.H.num_edges},
            "square_free": is_square_free(H),
            "bipartite_g": is_bipartite(self.G)[0],
            "bipartite_h": is_bipartite(H)[0],
            "chi_h": H.euler_characteristic(),
        }
        if self.folded is not None:
            inp["folded_h"] = {"n": self.folded.n, "edges": self.folded.num_edges}
        return {
            "schema": SCHEMA_VERSION,
            "input": inp,
            "components": [c.as_dict() for c in self.components],
            "checks": [c.as_dict() for c in self.checks],
            "stats": dict(self.stats),
        }


def classify_component(
    G: Graph,
    H: Graph,
    f: Sequence[int],
    rg: ReconfigGraph,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_dim: int = DEFAULT_MAX_DIM,
    with_pi: bool = True,
    debug_checks: bool = False,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> Classification:
    v = base_vertex(G)
    cid = rg.component_of(f)
    cls, words = image_class(G, H, f, v)
    h_bip = is_bipartite(H)[0]
    prediction = predict_from_class(cls, h_bip)
    P = build_component_poset(G, H, f, max_cells, rg=rg)
    C = cellular_chain_complex(P, max_dim)
    if debug_checks and not C.check_dd_zero():
        raise AssertionError("boundary of boundary is nonzero")
    profile = homology_profile(C)
    if debug_checks:
        _cross_check(P, profile, max_dim, max_simplices)
    chi_h = H.euler_characteristic()
    verdict = verify(prediction, profile, chi_h)
    c = Classification(
        cid, tuple(f), len(rg.component(cid)), len(P), cls, words,
        prediction, profile, euler_characteristic_cells(P), verdict,
    )
    if with_pi:
        pi = realizable_subgroup(G, H, f, v, rg=rg, check_all_neighbors=debug_checks)
        c.pi = pi
        c.trichotomy_ok = trichotomy_holds(cls, pi)
        c.pi_consistent = pi.rank == profile.b(1)
    return c


def _cross_check(P, profile: HomologyProfile, max_dim: int, max_simplices: int) -> None:
    """Compare with simplicial homology of the order complex on the degrees both compute exactly."""
    X = order_complex(P, max_dim, max_simplices)
    other = homology_profile(boundary_matrices(X))
    k = min(len(profile.betti), len(other.betti))
    if profile.betti[:k] != other.betti[:k] or profile.torsion[:k] != other.torsion[:k]:
        raise AssertionError(f"cellular {profile.betti} and order complex {other.betti} disagree")


def component_count_checks(G: Graph, H: Graph, comps: Sequence[Classification]) -> list:
    checks = []
    g_bip = is_bipartite(G)[0]
    h_bip = is_bipartite(H)[0]
    if g_bip:
        want = 2 if h_bip else 1
        trivial = [c for c in comps if c.image_class is SubgroupClass.TRIVIAL]
        checks.append(Check(
            "trivial_image_components",
            len(trivial) == want,
            f"{len(trivial)} components with trivial f_*, expected {want}",
        ))
        if cycle_rank(H) >= 2:
            kind = Prediction.TYPE_OF_H if h_bip else Prediction.DOUBLE_COVER_OF_H
            hits = [c for c in comps if c.prediction is kind and c.verdict == MATCH]
            checks.append(Check(
                "components_of_type_h" if h_bip else "components_of_double_cover",
                len(hits) == want,
                f"{len(hits)} components verified {kind.value}, expected {want}",
            ))
    else:
        bad = [c.component_id for c in comps if c.settled not in ("Point", "Circle")]
        checks.append(Check(
            "nonbipartite_point_or_circle",
            not bad,
            "all components contractible or circles" if not bad else f"components {bad} are not",
        ))
    return checks


def classify_pair(
    G: Graph,
    H: Graph,
    *,
    g_name: str = "G",
    h_name: str = "H",
    max_homs: int = DEFAULT_MAX_HOMS,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_dim: int = DEFAULT_MAX_DIM,
    fold: bool = False,
    debug_checks: bool = False,
    seed: Optional[Sequence[int]] = None,
    with_pi: bool = True,
    timing: bool = False,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> Report:
    """Run the whole pipeline and collect a Report."""
    if max_dim < 2:
        raise ValueError("max_dim must be >= 2")
    t0 = time.perf_counter()
    folded = None
    target = H
    if fold:
        folded, _ = fold_reduce(H)
        target = folded
    check_inputs(G, target)
    rg = reconfig_components(G, target, max_homs)
    reps = [rg.homs[i] for i in rg.representatives()]
    if seed is not None:
        seed = tuple(seed)
        if seed not in rg.index:
            raise InputError(f"seed {seed} is not a homomorphism G -> H")
        reps = [rg.homs[rg.representatives()[rg.component_of(seed)]]]
    comps = [
        classify_component(
            G, target, f, rg,
            max_cells=max_cells, max_dim=max_dim, with_pi=with_pi, debug_checks=debug_checks,
            max_simplices=max_simplices,
        )
        for f in reps
    ]
    checks = component_count_checks(G, target, comps) if seed is None else []
    if with_pi:
        checks.append(Check(
            "pi_rank_equals_b1",
            all(c.pi_consistent for c in comps),
            "rank of Pi(f,v) equals b1 in every component",
        ))
        checks.append(Check(
            "pi_trichotomy",
            all(c.trichotomy_ok for c in comps),
            "Pi(f,v) agrees with the class of f_* image",
        ))
    stats = {
        "homs": len(rg.homs),
        "components": rg.num_components,
        "reconfig_edges": len(rg.edges),
        "cells": sum(c.cells for c in comps),
        "max_dim": max_dim,
        "caps": {"max_homs": max_homs, "max_cells": max_cells},
    }
    if timing:
        stats["seconds"] = round(time.perf_counter() - t0, 3)
    return Report(g_name, h_name, G, H, folded, comps, checks, stats)


@dataclass
class TreeCheck:
    empty: bool
    num_components: int
    profiles: list
    parity_ok: bool
    passed: bool


def hom_tree_check(
    G: Graph,
    T: Graph,
    max_homs: int = DEFAULT_MAX_HOMS,
    max_dim: int = DEFAULT_MAX_DIM,
) -> TreeCheck:
    """Hom(G, T) is two points up to homotopy, split by parity of distances."""
    if not is_tree(T) or T.num_edges == 0:
        raise InputError("T must be a finite tree with at least one edge")
    rg = reconfig_components(G, T, max_homs)
    if not rg.homs:
        return TreeCheck(True, 0, [], True, True)
    profiles = []
    for i in rg.representatives():
        P = build_component_poset(G, T, rg.homs[i], rg=rg)
        profiles.append(homology_profile(cellular_chain_complex(P, max_dim)))
    dist = [bfs_distances(T, s) for s in range(T.n)]
    parity_ok = True
    for (a, f0), (b, f1) in combinations(enumerate(rg.homs), 2):
        pars = {dist[f0[x]][f1[x]] % 2 for x in range(G.n)}
        same = rg.component_id[a] == rg.component_id[b]
        if len(pars) != 1 or same != (pars == {0}):
            parity_ok = False
            break
    contractible = all(
        p.b(0) == 1 and not any(p.betti[1:]) and p.torsion_free for p in profiles
    )
    passed = rg.num_components == 2 and contractible and parity_ok
    return TreeCheck(False, rg.num_components, profiles, parity_ok, passed)


__all__ = [
    "Check",
    "Classification",
    "InputError",
    "Prediction",
    "Report",
    "TreeCheck",
    "base_vertex",
    "check_inputs",
    "classify_component",
    "classify_pair",
    "component_count_checks",
    "expected_b1",
    "hom_tree_check",
    "image_class",
    "predict",
    "predict_from_class",
    "same_subgroup",
    "verify",
    "trichotomy_holds",
]
