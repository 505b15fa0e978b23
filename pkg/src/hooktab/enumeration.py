"""Exhaustive generators, the full bijection, and verification drivers.

All generators return canonically ordered lists (lexicographic on the text
serialization) so that counts and golden files are stable across runs and
worker counts.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, NamedTuple

from .shapes import (
    Partition,
    check_partition,
    check_skew,
    partitions_between,
    partitions_containing,
    partitions_up_to,
    skew_cells,
    skew_shapes,
)
from .switching import gg_jdt, is_biflagged, shuffle
from .tableaux import (
    HookCell,
    HookValuedTableau,
    MixedTableau,
    alpha,
    beta,
    classify_mixed,
    is_exquisite,
    weight_hvt,
    weight_mixed,
)
from .textform import serialize_hvt, serialize_mixed
from .uncrowding import arm_bump, leg_bump, uncrowd, uncrowd_canonical


class EnumBounds(NamedTuple):
    max_entry: int
    max_excess: int


DEFAULT_BOUNDS = EnumBounds(3, 2)
DEFAULT_LAMBDA_LIMIT = 4
DEFAULT_OUTER_LIMIT = 6


def _hook_cells(hook: int, max_entry: int, budget: int):
    """All hooks with the given hook entry, entries <= max_entry and at most
    budget extra (arm plus leg) entries."""
    for extra in range(budget + 1):
        for n_arms in range(extra + 1):
            n_legs = extra - n_arms
            for arms in combinations_with_replacement(
                range(hook, max_entry + 1), n_arms
            ):
                for legs in combinations(range(hook + 1, max_entry + 1), n_legs):
                    yield HookCell(hook, arms, legs)


def enum_hvt(lam: Partition, bounds: EnumBounds) -> list[HookValuedTableau]:
    """All hook-valued tableaux of shape lam with entries <= max_entry and
    total excess <= max_excess."""
    lam = check_partition(lam)
    n, emax = bounds
    if not lam:
        return [HookValuedTableau(())]
    positions = [(r, c) for r, width in enumerate(lam, 1) for c in range(1, width + 1)]
    out: list[HookValuedTableau] = []
    grid: dict[tuple[int, int], HookCell] = {}

    def place(idx: int, budget: int) -> None:
        if idx == len(positions):
            rows = [
                [grid[(r, c)] for c in range(1, width + 1)]
                for r, width in enumerate(lam, 1)
            ]
            out.append(HookValuedTableau(rows))
            return
        r, c = positions[idx]
        hook_min = 1
        left = grid.get((r, c - 1))
        if left is not None:
            hook_min = max(hook_min, left.max_entry)
        below = grid.get((r - 1, c))
        if below is not None:
            hook_min = max(hook_min, below.max_entry + 1)
        for hook in range(hook_min, n + 1):
            for cell in _hook_cells(hook, n, budget):
                grid[(r, c)] = cell
                place(idx + 1, budget - len(cell.arms) - len(cell.legs))
        grid.pop((r, c), None)

    place(0, emax)
    return sorted(out, key=serialize_hvt)


def enum_ssyt(mu: Partition, n: int) -> list[HookValuedTableau]:
    """All semistandard Young tableaux of shape mu with entries in 1..n,
    as zero-excess hook-valued tableaux."""
    return enum_hvt(mu, EnumBounds(n, 0))


def _fmt_candidates(r: int, c: int):
    return [alpha(k) for k in range(1, c)] + [beta(k) for k in range(1, r)]


def _enum_fmt_filtered(outer, inner, keep) -> list[MixedTableau]:
    outer, inner = check_skew(outer, inner)
    cells = sorted(skew_cells(outer, inner))
    pools = [_fmt_candidates(r, c) for (r, c) in cells]
    out = []
    for combo in product(*pools):
        T = MixedTableau(outer, inner, dict(zip(cells, combo)))
        if keep(T):
            out.append(T)
    return sorted(out, key=serialize_mixed)


def enum_exquisite(outer, inner) -> list[MixedTableau]:
    """All exquisite tableaux of the skew shape (finite via the flags)."""
    return _enum_fmt_filtered(outer, inner, is_exquisite)


def enum_biflagged(outer, inner) -> list[MixedTableau]:
    """All biflagged tableaux of the skew shape."""
    return _enum_fmt_filtered(outer, inner, is_biflagged)


def enum_sorted_strict(outer, inner, max_index: int) -> list[MixedTableau]:
    """All alpha-column-strict, beta-row-strict, (alpha,beta)-sorted mixed
    tableaux with indices in 1..max_index (switching-theorem inputs)."""
    outer, inner = check_skew(outer, inner)
    out = []
    for nu in partitions_between(inner, outer):
        a_cells = sorted(skew_cells(nu, inner))
        b_cells = sorted(skew_cells(outer, nu))
        pools = [[alpha(k) for k in range(1, max_index + 1)] for _ in a_cells] + [
            [beta(k) for k in range(1, max_index + 1)] for _ in b_cells
        ]
        cells = a_cells + b_cells
        for combo in product(*pools):
            T = MixedTableau(outer, inner, dict(zip(cells, combo)))
            flags = classify_mixed(T)
            if flags.alpha_column_strict and flags.beta_row_strict:
                out.append(T)
    return sorted(out, key=serialize_mixed)


def enum_mixed(outer, inner, alpha_indices, beta_indices) -> list[MixedTableau]:
    """All mixed tableaux over the given index alphabets (oracle fodder)."""
    outer, inner = check_skew(outer, inner)
    cells = sorted(skew_cells(outer, inner))
    pool = [alpha(k) for k in alpha_indices if k > 0] + [
        beta(k) for k in beta_indices
    ]
    out = []
    for combo in product(pool, repeat=len(cells)):
        out.append(MixedTableau(outer, inner, dict(zip(cells, combo))))
    return out


def phi(T: HookValuedTableau):
    """The composite bijection: canonical uncrowding then GG-jdt on the
    recording tableau, landing in SSYT x EXQ."""
    result = uncrowd_canonical(T, "LA")
    return result.insertion, gg_jdt(result.recording)


# ---------------------------------------------------------------------------
# Verification drivers


@dataclass
class VerificationReport:
    check_id: str
    parameters: dict
    instances_checked: int
    failures: list[str]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_elapsed: bool = False) -> str:
        payload = {
            "schema": 1,
            "check_id": self.check_id,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
        }
        if include_elapsed:
            payload["elapsed"] = self.elapsed
        return json.dumps(payload, sort_keys=True, indent=2)


def _map_chunks(items, fn: Callable, jobs: int):
    """Apply fn to every item, optionally across worker threads; results are
    concatenated in input order so the merge is deterministic."""
    if jobs <= 1 or len(items) < 2:
        results = [fn(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, items))
    out = []
    for r in results:
        out.extend(r)
    return out


def _lambdas(lam, limit):
    if lam is not None:
        return [check_partition(lam)]
    return partitions_up_to(limit)


def _check_commute(lam, bounds, jobs):
    """Lemma on commuting arm and leg bumps, all three cases."""
    lams = _lambdas(lam, DEFAULT_LAMBDA_LIMIT)
    tableaux = [T for l in lams for T in enum_hvt(l, bounds)]
    relevant = [T for T in tableaux if T.arm_excess >= 1 and T.leg_excess >= 1]

    def check(T):
        bad = []
        TA, _ = arm_bump(T)
        ga = TA.num_cells - T.num_cells
        TLA, _ = leg_bump(TA)
        gla = TLA.num_cells - TA.num_cells
        TL, _ = leg_bump(T)
        gl = TL.num_cells - T.num_cells
        TAL, _ = arm_bump(TL)
        gal = TAL.num_cells - TL.num_cells
        name = serialize_hvt(T)
        if ga == 1 and gla == 1 and gl == 1 and gal == 0:
            TAAL, _ = arm_bump(TAL)
            if TLA != TAAL:
                bad.append(f"case1 equality fails for {name}")
            if TAAL.num_cells - TAL.num_cells != 1:
                bad.append(f"case1 type A(1)A(0)L(1) fails for {name}")
        elif ga == 1 and gla == 0 and gl == 1 and gal == 1:
            TLLA, _ = leg_bump(TLA)
            if TLLA != TAL:
                bad.append(f"case2 equality fails for {name}")
            if TLLA.num_cells - TLA.num_cells != 1:
                bad.append(f"case2 type L(1)L(0)A(1) fails for {name}")
        else:
            if gl != gla or gal != ga:
                bad.append(f"case3 type swap fails for {name}")
            if TLA != TAL:
                bad.append(f"case3 equality fails for {name}")
        return bad

    return len(relevant), _map_chunks(relevant, check, jobs)


def _check_shuffle_theorem(lam, bounds, jobs):
    """Interchanging the uncrowding order: equal insertions, shuffled
    recordings, for both the length-two words and the canonical orders."""
    lams = _lambdas(lam, DEFAULT_LAMBDA_LIMIT)
    tableaux = [T for l in lams for T in enum_hvt(l, bounds)]

    def check(T):
        bad = []
        name = serialize_hvt(T)
        for la_word, al_word, label in (
            ("LA", "AL", "single"),
            (None, None, "canonical"),
        ):
            if label == "single":
                p1, q1, _ = uncrowd(T, la_word)
                p2, q2, _ = uncrowd(T, al_word)
            else:
                p1, q1, _ = uncrowd_canonical(T, "LA")
                p2, q2, _ = uncrowd_canonical(T, "AL")
            if p2 != p1:
                bad.append(f"{label}: insertion tableaux differ for {name}")
            if q2 != shuffle(q1):
                bad.append(f"{label}: recording is not the shuffle for {name}")
        return bad

    return len(tableaux), _map_chunks(tableaux, check, jobs)


def _expected_pairs(lam, bounds, recording_enum):
    n, emax = bounds
    expected = set()
    for mu in partitions_containing(lam, emax):
        if len(mu) > n:
            continue
        qs = recording_enum(mu, lam)
        if not qs:
            continue
        for P in enum_ssyt(mu, n):
            for Q in qs:
                expected.add((serialize_hvt(P), serialize_mixed(Q)))
    return expected


def _check_image(lam, bounds, jobs, *, use_phi: bool):
    """Bijectivity and weight preservation of canonical uncrowding (onto
    SSYT x BFT) or of the composite map (onto SSYT x EXQ)."""
    lams = _lambdas(lam, DEFAULT_LAMBDA_LIMIT)
    total = 0
    failures = []
    for l in lams:
        tableaux = enum_hvt(l, bounds)
        total += len(tableaux)
        seen = {}
        for T in tableaux:
            name = serialize_hvt(T)
            if use_phi:
                P, Q = phi(T)
                if not is_exquisite(Q):
                    failures.append(f"phi recording not exquisite for {name}")
            else:
                P, Q, _ = uncrowd_canonical(T, "LA")
                if not is_biflagged(Q):
                    failures.append(f"recording not biflagged for {name}")
            if P.arm_excess or P.leg_excess:
                failures.append(f"insertion has excess for {name}")
            if weight_hvt(T) != weight_hvt(P) * weight_mixed(Q):
                failures.append(f"weight not preserved for {name}")
            key = (serialize_hvt(P), serialize_mixed(Q))
            if key in seen:
                failures.append(f"collision: {name} and {seen[key]} map to {key}")
            seen[key] = name
        expected = _expected_pairs(
            l,
            bounds,
            (lambda mu, lam_: enum_exquisite(mu, lam_))
            if use_phi
            else (lambda mu, lam_: enum_biflagged(mu, lam_)),
        )
        for missing in sorted(expected - set(seen)):
            failures.append(f"pair not attained for lambda={l}: {missing}")
        for extra in sorted(set(seen) - expected):
            failures.append(f"unexpected pair for lambda={l}: {extra}")
    return total, failures


def _check_ggjdt_bijection(outer, inner, max_outer, jobs):
    """GG-jdt as a weight-preserving bijection BFT -> EXQ, per skew shape."""
    if outer is not None:
        shapes = [check_skew(outer, inner or ())]
    else:
        shapes = skew_shapes(max_outer)

    def check(shape):
        mu, lam = shape
        bad = []
        bft = enum_biflagged(mu, lam)
        exq = enum_exquisite(mu, lam)
        images = []
        for Q in bft:
            E = gg_jdt(Q)
            images.append(E)
            name = serialize_mixed(Q)
            if not is_exquisite(E):
                bad.append(f"{mu}/{lam}: image of {name} not exquisite")
            if weight_mixed(E) != weight_mixed(Q):
                bad.append(f"{mu}/{lam}: weight changed for {name}")
        if len(set(images)) != len(images):
            bad.append(f"{mu}/{lam}: GG-jdt not injective")
        if len(bft) != len(exq):
            bad.append(f"{mu}/{lam}: |BFT|={len(bft)} but |EXQ|={len(exq)}")
        elif set(images) != set(exq):
            bad.append(f"{mu}/{lam}: image differs from EXQ")
        return bad

    total = len(shapes)
    return total, _map_chunks(shapes, check, jobs)


CHECK_IDS = (
    "commute_lemma",
    "shuffle_theorem",
    "uncrowd_image",
    "phi_bijection",
    "ggjdt_bijection",
)


def verify(
    check_id: str,
    lam=None,
    bounds: EnumBounds = DEFAULT_BOUNDS,
    *,
    outer=None,
    inner=None,
    max_outer: int = DEFAULT_OUTER_LIMIT,
    seed: int = 0,
    jobs: int = 1,
) -> VerificationReport:
    """Run one exhaustive theorem check and collect every counterexample."""
    t0 = time.perf_counter()
    if check_id == "commute_lemma":
        n, failures = _check_commute(lam, bounds, jobs)
    elif check_id == "shuffle_theorem":
        n, failures = _check_shuffle_theorem(lam, bounds, jobs)
    elif check_id == "uncrowd_image":
        n, failures = _check_image(lam, bounds, jobs, use_phi=False)
    elif check_id == "phi_bijection":
        n, failures = _check_image(lam, bounds, jobs, use_phi=True)
    elif check_id == "ggjdt_bijection":
        n, failures = _check_ggjdt_bijection(outer, inner, max_outer, jobs)
    else:
        raise ValueError(f"unknown check {check_id!r}; known: {CHECK_IDS}")
    # only bounds and shapes: seed and jobs must not change the output bytes
    params = {
        "lambda": list(lam) if lam is not None else None,
        "n": bounds.max_entry,
        "excess": bounds.max_excess,
        "outer": list(outer) if outer is not None else None,
        "inner": list(inner) if inner is not None else None,
        "max_outer": max_outer,
    }
    return VerificationReport(
        check_id=check_id,
        parameters=params,
        instances_checked=n,
        failures=sorted(failures),
        elapsed=time.perf_counter() - t0,
    )
