"""Named exhaustive checks behind the verify command.

Every check clamps its stated exhaustive bound to the requested nmax,
reports pass/fail with a minimal counterexample, and never mutates
shared state.  Scopes: machine (includes the permutation-core checks),
grid, rgf, bijections, sequences.
"""

from __future__ import annotations

import time
from collections import Counter
from itertools import permutations
from typing import Callable, NamedTuple

from . import bijections, grid, machine, paths, rgf, sequences
from .perms import (
    MU,
    Perm,
    all_perms,
    avoids,
    contains_classical,
    contains_mesh,
    complement,
    format_perm,
    is_layered,
    _contains_231,
    _contains_2314,
    _is_layered_by_avoidance,
    ltr_minima,
    mu_predicate,
    standardize,
)

SCOPES = ("machine", "grid", "rgf", "bijections", "sequences")

WILF_ELEVEN = (
    (1, 2, 1, 2, 3),
    (1, 2, 1, 3, 2),
    (1, 2, 1, 3, 4),
    (1, 2, 2, 1, 3),
    (1, 2, 2, 3, 1),
    (1, 2, 2, 3, 4),
    (1, 2, 3, 1, 2),
    (1, 2, 3, 2, 1),
    (1, 2, 3, 2, 3),
    (1, 2, 3, 3, 1),
    (1, 2, 3, 3, 2),
)

# the two members whose maximum statistic is distributed differently
MAX_EQUIDISTRIBUTED_NINE = tuple(
    q for q in WILF_ELEVEN if q not in ((1, 2, 1, 3, 4), (1, 2, 2, 3, 4))
)


class CheckResult(NamedTuple):
    name: str
    scope: str
    passed: bool
    detail: str
    seconds: float
    counterexample: str | None = None


class _Fail(Exception):
    def __init__(self, counterexample: str):
        self.counterexample = counterexample
        super().__init__(counterexample)


def _sortable_sets(nmax: int) -> dict[int, list[Perm]]:
    return {n: machine.enumerate_sortable(n, (1, 3, 2)) for n in range(1, nmax + 1)}


# -- machine scope ---------------------------------------------------------

def _check_sortable_counts_132(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        got = len(machine.enumerate_sortable(n, (1, 3, 2)))
        want = sequences.a007317(n - 1)
        if got != want:
            raise _Fail(f"n={n}: {got} sortable vs formula {want}")
    return f"counts match the binomial-Catalan formula, n <= {bound}"


def _check_sortable_counts_123(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        got = len(machine.enumerate_sortable(n, (1, 2, 3)))
        want = 1 + sequences.catalan_double_partial_sums(n - 1)
        if got != want:
            raise _Fail(f"n={n}: {got} sortable vs reference {want}")
    return f"counts match twice-summed Catalan reference, n <= {bound}"


def _check_characterization_132(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in all_perms(n):
            sortable = machine.is_sigma_sortable(p, (1, 3, 2))
            basis = avoids(p, (2, 3, 1, 4)) and not contains_mesh(p, MU)
            if sortable != basis:
                raise _Fail(f"{format_perm(p)}: sortable={sortable}, basis={basis}")
    return f"sortable set equals the two-pattern basis, n <= {bound}"


def _check_class_law(nmax: int) -> str:
    bound = min(7, nmax)
    for sigma in permutations((1, 2, 3)):
        rep = machine.verify_characterizations(bound, sigma)
        if not rep.holds:
            raise _Fail(f"sigma={format_perm(sigma)}: {rep.detail}")
        is_class = contains_classical(machine.sigma_hat(sigma), (2, 3, 1))
        if is_class != (rep.kind == "class") and sigma != (1, 3, 2):
            raise _Fail(f"sigma={format_perm(sigma)}: kind {rep.kind}")
    w = machine.witness_non_class((1, 3, 2), 4)
    if w != ((2, 4, 1, 3), (1, 3, 2)):
        raise _Fail(f"witness for 132 was {w}")
    return f"class test and witnesses agree for all S_3 controls, n <= {bound}"


def _check_prefix_closure(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(2, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            q = standardize(p[:-1])
            if not machine.is_sigma_sortable(q, (1, 3, 2)):
                raise _Fail(f"{format_perm(p)} sortable, prefix {format_perm(q)} not")
    return f"sortable permutations are closed under prefixes, n <= {bound}"


def _check_stacksort_231(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        ident = tuple(range(1, n + 1))
        for p in all_perms(n):
            if (machine.stacksort(p) == ident) != avoids(p, (2, 3, 1)):
                raise _Fail(format_perm(p))
    return f"one stack sorts exactly the 231-avoiders, n <= {bound}"


def _check_suffix_law(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            d = grid.decompose(p)
            s = machine.s_sigma(p, (1, 3, 2))
            mv = d.minima_values
            if s[len(s) - d.k :] != tuple(reversed(mv)):
                raise _Fail(f"{format_perm(p)} -> {format_perm(s)}")
            pos = 0
            for blk in d.blocks:
                seg = s[pos : pos + len(blk)]
                if sorted(seg) != sorted(blk):
                    raise _Fail(f"{format_perm(p)} -> {format_perm(s)}")
                pos += len(blk)
    return f"output ends with reversed minima after grouped blocks, n <= {bound}"


def _check_trace_invariants(nmax: int) -> str:
    bound = min(6, nmax)
    for sigma in ((1, 3, 2), (3, 2, 1), (2, 1)):
        for n in range(1, bound + 1):
            for p in all_perms(n):
                out, trace = machine.sigma_stack_pass(p, sigma)
                if len(out) != n or sorted(out) != list(range(1, n + 1)):
                    raise _Fail(f"{format_perm(p)} sigma={format_perm(sigma)}")
                pushes = [v for op, v, _ in trace.events if op == "PUSH"]
                pops = [v for op, v, _ in trace.events if op == "POP"]
                if tuple(pushes) != p or tuple(pops) != out:
                    raise _Fail(f"{format_perm(p)} sigma={format_perm(sigma)}")
                for _, _, snap in trace.events:
                    if contains_classical(standardize(snap), sigma):
                        raise _Fail(
                            f"{format_perm(p)} sigma={format_perm(sigma)} snap={snap}"
                        )
    return f"trace conservation and stack avoidance hold, n <= {bound}"


def _check_fast_vs_generic(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        for p in all_perms(n):
            generic132 = machine.sigma_stack_pass(p, (1, 3, 2))[0]
            if machine.s_sigma(p, (1, 3, 2)) != generic132:
                raise _Fail(f"132 fast path differs on {format_perm(p)}")
            generic21 = machine.sigma_stack_pass(p, (2, 1))[0]
            if machine.stacksort(p) != generic21:
                raise _Fail(f"21 fast path differs on {format_perm(p)}")
    return f"fast passes agree with the generic machine, n <= {bound}"


def _check_stack_shape(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            if not machine.stack_shape_check(p):
                raise _Fail(format_perm(p))
    return f"stack stays minima-floor plus one increasing block, n <= {bound}"


def _check_perm_layered(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        count = 0
        for p in all_perms(n):
            a = is_layered(p)
            if a != _is_layered_by_avoidance(p):
                raise _Fail(format_perm(p))
            count += a
            if is_layered(complement(p)) != avoids(p, (2, 1, 3), (1, 3, 2)):
                raise _Fail(format_perm(p))
        if count != 2 ** (n - 1):
            raise _Fail(f"n={n}: {count} layered")
    return f"layered tests agree and count 2^(n-1), n <= {bound}"


def _check_perm_fast_patterns(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        for p in all_perms(n):
            if _contains_231(p) != contains_classical(p, (2, 3, 1)):
                raise _Fail(f"231 on {format_perm(p)}")
            if _contains_2314(p) != contains_classical(p, (2, 3, 1, 4)):
                raise _Fail(f"2314 on {format_perm(p)}")
    return f"specialized pattern scans match the generic matcher, n <= {bound}"


def _check_perm_mesh_predicate(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        for p in all_perms(n):
            if contains_mesh(p, MU) != mu_predicate(p):
                raise _Fail(format_perm(p))
    return f"shaded-box matcher agrees with the direct predicate, n <= {bound}"


# -- grid scope ------------------------------------------------------------

def _check_grid_reconstruction(nmax: int) -> str:
    bound = min(9, nmax)
    for n in range(1, bound + 1):
        for p in all_perms(n):
            d = grid.decompose(p)
            rebuilt: list[int] = []
            for (pos, mval), blk in zip(d.minima, d.blocks):
                rebuilt.append(mval)
                rebuilt.extend(blk)
            if tuple(rebuilt) != p:
                raise _Fail(format_perm(p))
            if d.minima_values[-1] != 1 or list(d.minima_values) != sorted(
                d.minima_values, reverse=True
            ):
                raise _Fail(format_perm(p))
            for (i, j), cell in d.cells.items():
                if i > j:
                    raise _Fail(f"{format_perm(p)} cell ({i},{j})")
    return f"interleaving minima and blocks rebuilds the input, n <= {bound}"


def _check_grid_generator(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        if grid.generate_sortable(n) != machine.enumerate_sortable(n, (1, 3, 2)):
            raise _Fail(f"n={n}")
    return f"recursive generation equals brute force, n <= {bound}"


def _check_grid_children(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            kids = grid.children(p)
            t = len(grid.active_cells(p))
            if len(kids) != t + 1:
                raise _Fail(f"{format_perm(p)}: {len(kids)} children, {t} active")
            outs = [q for _, q in kids]
            if len(set(outs)) != len(outs):
                raise _Fail(f"{format_perm(p)}: duplicate children")
            for _, q in kids:
                if standardize(q[:-1]) != p:
                    raise _Fail(f"{format_perm(p)} -> {format_perm(q)}")
    return f"each parent yields t+1 distinct children, n < {bound + 1}"


def _check_grid_tree_unique(nmax: int) -> str:
    bound = min(8, nmax)
    level: list[Perm] = [(1,)]
    for n in range(2, bound + 1):
        nxt: list[Perm] = []
        for p in level:
            nxt.extend(q for _, q in grid.children(p))
        if len(nxt) != len(set(nxt)):
            raise _Fail(f"n={n}: duplicates across parents")
        if sorted(nxt) != machine.enumerate_sortable(n, (1, 3, 2)):
            raise _Fail(f"n={n}: level differs from brute force")
        level = nxt
    return f"the generation tree hits each member exactly once, n <= {bound}"


def _check_grid_inversion_in_cell(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            d = grid.decompose(p)
            posn = {v: i for i, v in enumerate(p)}
            for (i, j), cell in d.cells.items():
                mi = d.minima_values[i - 1]
                for a in range(len(cell)):
                    for b in range(a + 1, len(cell)):
                        x, y = cell[a], cell[b]
                        if x < y:
                            continue
                        between = p[posn[x] + 1 : posn[y]]
                        if not any(z < mi for z in between):
                            raise _Fail(f"{format_perm(p)} cell ({i},{j}) pair {x},{y}")
    return f"every cell inversion straddles a smaller element, n <= {bound}"


def _check_grid_structural_necessary(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            rep = grid.structural_check(p)
            if not rep.passed:
                raise _Fail(f"{format_perm(p)} fails {rep.failures()}")
    if not grid.structural_check((1, 3, 2)).passed:
        raise _Fail("132 should pass the necessary conditions")
    if machine.is_sigma_sortable((1, 3, 2), (1, 3, 2)):
        raise _Fail("132 should not be sortable")
    return f"necessary conditions hold on sortables yet admit 132, n <= {bound}"


def _check_grid_strips_colayered(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            d = grid.decompose(p)
            for i in range(1, d.k + 1):
                if not avoids(d.std_hstrip(i), (2, 1, 3), (1, 3, 2)):
                    raise _Fail(f"{format_perm(p)} strip {i}")
    return f"horizontal strips are skew sums of increasing runs, n <= {bound}"


# -- rgf scope -------------------------------------------------------------

def _check_rgf_partition_roundtrip(nmax: int) -> str:
    bound = min(9, nmax)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            part = rgf.rgf_to_partition(r)
            if rgf.partition_to_rgf(part) != r:
                raise _Fail(rgf.format_rgf(r))
    return f"partition encoding round trips, n <= {bound}"


def _check_rgf_counts_bell(nmax: int) -> str:
    bound = min(9, nmax)
    for n in range(1, bound + 1):
        got = sum(1 for _ in rgf.enumerate_rgfs(n))
        if got != sequences.bell(n):
            raise _Fail(f"n={n}: {got}")
    return f"word counts are Bell numbers, n <= {bound}"


def _check_rgf_pattern_padding(nmax: int) -> str:
    bound = min(7, nmax)
    pats = [q for k in range(1, 5) for q in rgf.all_words_standardized(k)]
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            for q in pats:
                t = q[0]
                padded = tuple(range(1, t)) + q
                if rgf.rgf_contains(r, q) != rgf.rgf_contains(r, padded):
                    raise _Fail(f"{rgf.format_rgf(r)} vs {q}")
    return f"prefixing 1..t-1 to a pattern never changes containment, n <= {bound}"


def _check_rgf_1221_wsubword(nmax: int) -> str:
    bound = min(9, nmax)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            lhs = not rgf.rgf_contains(r, (1, 2, 2, 1))
            rhs = rgf.is_weakly_increasing(rgf.w_subword(r))
            if lhs != rhs:
                raise _Fail(rgf.format_rgf(r))
    return f"1221-avoidance matches weakly increasing leftovers, n <= {bound}"


def _check_rgf_12321_stripped_test(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            if rgf.repeated_ltr_maxima(r):
                continue
            lhs = not rgf.rgf_contains(r, (1, 2, 3, 2, 1))
            rhs = rgf.is_weakly_increasing(rgf.strip_ltr_maxima(r))
            if lhs != rhs:
                raise _Fail(rgf.format_rgf(r))
    return f"on repeat-free words, 12321-avoidance is the stripped test, n <= {bound}"


def _check_rgf_alpha(nmax: int) -> str:
    bound = min(8, nmax)
    pat = (1, 2, 3, 2, 1)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            a = rgf.alpha(r)
            if rgf.rgf_contains(r, pat) != rgf.rgf_contains(a, pat):
                raise _Fail(rgf.format_rgf(r))
    return f"deleting repeated ltr-maxima preserves 12321 status, n <= {bound}"


def _check_rgf_12321_counts(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(bound + 1):
        got = len(rgf.enumerate_avoiders(n + 1, (1, 2, 3, 2, 1)))
        want = sequences.a007317(n)
        if got != want:
            raise _Fail(f"n={n + 1}: {got} vs {want}")
    return f"12321-avoider counts match the binomial transform, n <= {bound + 1}"


def _check_rgf_wilf_eleven(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        counts = {q: len(rgf.enumerate_avoiders(n, q)) for q in WILF_ELEVEN}
        if len(set(counts.values())) != 1:
            raise _Fail(f"n={n}: {sorted(counts.values())}")
    return f"all eleven five-letter patterns are equinumerous, n <= {bound}"


def _check_rgf_catalan_families(nmax: int) -> str:
    bound = min(9, nmax)
    for n in range(1, bound + 1):
        c = sequences.catalan(n)
        a = len(rgf.enumerate_avoiders(n, (1, 2, 2, 1)))
        b = len(rgf.enumerate_avoiders(n, (1, 2, 1, 2)))
        if a != c or b != c:
            raise _Fail(f"n={n}: {a}, {b} vs {c}")
    return f"1221- and 1212-avoiders are Catalan-many, n <= {bound}"


def _check_rgf_12231_2231(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_rgfs(n):
            if rgf.rgf_contains(r, (1, 2, 2, 3, 1)) != rgf.rgf_contains(
                r, (2, 2, 3, 1)
            ):
                raise _Fail(rgf.format_rgf(r))
    return f"the 12231 and 2231 containment tests coincide, n <= {bound}"


def _check_rgf_active_sites(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        for r in rgf.enumerate_avoiders(n, (1, 2, 2, 1)):
            sites = rgf.active_sites_1221(r)
            mx = max(r)
            for j in range(1, mx + 2):
                child = r + (j,)
                ok = not rgf.rgf_contains(child, (1, 2, 2, 1))
                if ok != (j in sites):
                    raise _Fail(f"{rgf.format_rgf(r)} + {j}")
    return f"appendable letters form exactly the stated interval, n <= {bound}"


def _check_rgf_pruned_vs_naive(nmax: int) -> str:
    bound = min(6, nmax)
    pats = ((1, 2, 2, 1), (1, 2, 2, 3, 1), (1, 2, 3, 2, 1), (1, 2, 1, 2))
    for n in range(1, bound + 1):
        words = list(rgf.enumerate_rgfs(n))
        for q in pats:
            naive = [r for r in words if not rgf.rgf_contains(r, q)]
            if rgf.enumerate_avoiders(n, q) != naive:
                raise _Fail(f"n={n} pattern {q}")
    return f"pruned avoider enumeration matches the naive filter, n <= {bound}"


# -- bijections scope ------------------------------------------------------

def _check_phi_roundtrip(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        for p in machine.enumerate_sortable(n, (1, 3, 2)):
            r = bijections.sortable_to_rgf(p)
            if rgf.rgf_contains(r, (1, 2, 2, 3, 1)):
                raise _Fail(f"{format_perm(p)} -> {rgf.format_rgf(r)}")
            if max(r) != len(ltr_minima(p)):
                raise _Fail(f"{format_perm(p)}: max vs minima count")
            if bijections.rgf_to_sortable(r) != p:
                raise _Fail(format_perm(p))
        for r in rgf.enumerate_avoiders(n, (1, 2, 2, 3, 1)):
            p = bijections.rgf_to_sortable(r)
            if not machine.is_sigma_sortable(p, (1, 3, 2)):
                raise _Fail(rgf.format_rgf(r))
            if bijections.sortable_to_rgf(p) != r:
                raise _Fail(rgf.format_rgf(r))
    return f"strip-word map round trips with max = #minima, n <= {bound}"


def _check_psi_roundtrip(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        seen = set()
        for r in rgf.enumerate_avoiders(n, (1, 2, 2, 1)):
            path = bijections.rgf_to_dyck_path(r)
            paths.validate_dyck(path)
            if len(path) != 2 * n:
                raise _Fail(rgf.format_rgf(r))
            if max(r) != 1 + paths.double_rises(path):
                raise _Fail(f"{rgf.format_rgf(r)} -> {path}")
            if bijections.dyck_path_to_rgf(path) != r:
                raise _Fail(rgf.format_rgf(r))
            seen.add(path)
        if len(seen) != sequences.catalan(n):
            raise _Fail(f"n={n}: image size {len(seen)}")
    return f"peak-insertion map is a statistic-preserving bijection, n <= {bound}"


def _check_beta_roundtrip(nmax: int) -> str:
    bound = min(7, nmax)
    pats = {"stack": (1, 2, 3, 2, 3), "queue": (1, 2, 3, 3, 2)}
    for mode, pat in pats.items():
        for n in range(0, bound + 1):
            image = set()
            for path in paths.enumerate_labeled_motzkin(n):
                r = bijections.labeled_motzkin_to_rgf(path, mode)
                if rgf.rgf_contains(r, pat):
                    raise _Fail(f"{mode}: {path} -> {rgf.format_rgf(r)}")
                if bijections.rgf_to_labeled_motzkin(r, mode) != path:
                    raise _Fail(f"{mode}: {path}")
                image.add(r)
            want = rgf.enumerate_avoiders(n + 1, pat)
            if sorted(image) != want:
                raise _Fail(f"{mode}: n={n} image mismatch")
    return f"container map round trips in both modes, length <= {bound}"


def _check_beta_reduced(nmax: int) -> str:
    bound = min(7, nmax)
    pats = {"stack": (1, 2, 1, 2), "queue": (1, 2, 2, 1)}
    for mode, pat in pats.items():
        for n in range(1, bound + 1):
            image = set()
            for path in paths.enumerate_labeled_motzkin(n):
                if "H1" in path:
                    continue
                r = bijections.labeled_motzkin_to_rgf(path, mode, reduced=True)
                if bijections.rgf_to_labeled_motzkin(r, mode, reduced=True) != path:
                    raise _Fail(f"{mode}: {path}")
                image.add(r)
            want = rgf.enumerate_avoiders(n, pat)
            if sorted(image) != want:
                raise _Fail(f"{mode}: n={n}")
            if len(image) != sequences.catalan(n):
                raise _Fail(f"{mode}: n={n} count {len(image)}")
    return f"label-free paths give the Catalan families, length <= {bound}"


def _check_beta_statistics(nmax: int) -> str:
    bound = min(7, nmax)
    for mode in ("stack", "queue"):
        for n in range(0, bound + 1):
            for path in paths.enumerate_labeled_motzkin(n):
                r = bijections.labeled_motzkin_to_rgf(path, mode)
                ups = sum(1 for s in path if s == "U")
                h0 = sum(1 for s in path if s == "H0")
                h1 = sum(1 for s in path if s == "H1")
                if ups + h0 != max(r) - 1:
                    raise _Fail(f"{mode}: {path}")
                if h1 != r.count(1) - 1:
                    raise _Fail(f"{mode}: {path}")
                singles = sum(1 for v in set(r) if v >= 2 and r.count(v) == 1)
                if h0 != singles:
                    raise _Fail(f"{mode}: {path}")
    return f"step counts transport to word statistics, length <= {bound}"


def _check_max_equidistribution_nine(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        dists = [
            tuple(sorted(rgf.max_distribution(n, q).items()))
            for q in MAX_EQUIDISTRIBUTED_NINE
        ]
        if len(set(dists)) != 1:
            raise _Fail(f"n={n}")
    return f"maximum statistic agrees across the nine patterns, n <= {bound}"


def _check_ell1_equidistribution(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(0, bound + 1):
        flat = Counter(
            sum(1 for s in path if s == "H1")
            for path in paths.enumerate_labeled_motzkin(n)
        )
        for pat in ((1, 2, 3, 2, 1), (1, 2, 3, 1, 2)):
            reps = Counter(
                len(rgf.repeated_ltr_maxima(r))
                for r in rgf.enumerate_avoiders(n + 1, pat)
            )
            if flat != reps:
                raise _Fail(f"n={n} pattern {pat}")
    return f"flat-step labels match repeated-maxima counts, length <= {bound}"


def _check_av321_map(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        image = set()
        domain = [
            r
            for r in rgf.enumerate_rgfs(n)
            if rgf.is_weakly_increasing(rgf.strip_ltr_maxima(r))
        ]
        for r in domain:
            p = bijections.rgf_to_av321(r)
            if contains_classical(p, (3, 2, 1)):
                raise _Fail(f"{rgf.format_rgf(r)} -> {format_perm(p)}")
            if rgf.rgf_contains(r, (1, 2, 3, 2, 1)):
                raise _Fail(f"domain word {rgf.format_rgf(r)} contains 12321")
            if max(r) != sum(
                1 for i, v in enumerate(p) if v > max(p[:i], default=0)
            ):
                raise _Fail(f"{rgf.format_rgf(r)}: maxima transport")
            if bijections.av321_to_rgf(p) != r:
                raise _Fail(rgf.format_rgf(r))
            image.add(p)
        want = [p for p in all_perms(n) if avoids(p, (3, 2, 1))]
        if sorted(image) != want:
            raise _Fail(f"n={n}: image is not all of Av(321)")
        if len(domain) != sequences.catalan(n):
            raise _Fail(f"n={n}: domain size {len(domain)}")
    return f"weak-remainder words biject onto 321-avoiders, n <= {bound}"


def _check_gamma_roundtrip(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(1, bound + 1):
        image = set()
        for r in rgf.enumerate_avoiders(n, (1, 2, 2, 3, 1)):
            out, steps = bijections.to_12321_avoider(r, with_steps=True)
            if rgf.rgf_contains(out, (1, 2, 3, 2, 1)):
                raise _Fail(rgf.format_rgf(r))
            if sorted(out) != sorted(r):
                raise _Fail(f"{rgf.format_rgf(r)}: multiset changed")
            for a, b in zip(steps, steps[1:]):
                if not b < a:
                    raise _Fail(f"{rgf.format_rgf(r)}: non-decreasing step")
            if bijections.to_12231_avoider(out) != r:
                raise _Fail(rgf.format_rgf(r))
            image.add(out)
        want = set(rgf.enumerate_avoiders(n, (1, 2, 3, 2, 1)))
        if image != want:
            raise _Fail(f"n={n}: image mismatch")
    return f"swap maps are mutually inverse multiset-preserving, n <= {bound}"


def _check_minima_distribution(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(1, bound + 1):
        dist = grid.minima_distribution(n + 1)
        for k in range(1, n + 2):
            want = sequences.max_distribution_formula(n, k - 1)
            if dist.get(k, 0) != want:
                raise _Fail(f"n={n + 1}, k={k}: {dist.get(k, 0)} vs {want}")
    return f"minima distribution matches the closed form, lengths <= {bound + 1}"


# -- sequences scope -------------------------------------------------------

def _check_dyck_counts(nmax: int) -> str:
    bound = min(10, nmax)
    for n in range(0, bound + 1):
        got = sum(1 for _ in paths.enumerate_dyck(n, cap=max(12, bound)))
        if got != sequences.catalan(n):
            raise _Fail(f"semilength {n}: {got}")
    return f"Dyck counts are Catalan numbers, semilength <= {bound}"


def _check_motzkin_counts(nmax: int) -> str:
    bound = min(10, nmax)
    for n in range(0, bound + 1):
        got = sum(1 for _ in paths.enumerate_motzkin(n, cap=max(12, bound)))
        if got != sequences.motzkin(n):
            raise _Fail(f"length {n}: {got}")
    return f"Motzkin counts match the recurrence, length <= {bound}"


def _check_labeled_motzkin_counts(nmax: int) -> str:
    bound = min(8, nmax)
    for n in range(0, bound + 1):
        got = sum(1 for _ in paths.enumerate_labeled_motzkin(n, cap=max(10, bound)))
        if got != sequences.a007317(n):
            raise _Fail(f"length {n}: {got}")
    return f"labeled path counts follow the binomial transform, length <= {bound}"


def _check_narayana_bruteforce(nmax: int) -> str:
    bound = min(6, nmax)
    for n in range(1, bound + 1):
        hist = Counter(paths.double_rises(p) for p in paths.enumerate_dyck(n))
        for k in range(1, n + 1):
            if hist.get(k - 1, 0) != sequences.narayana(n, k):
                raise _Fail(f"n={n}, k={k}")
    return f"double-rise histogram is the Narayana row, semilength <= {bound}"


def _check_dyck_children(nmax: int) -> str:
    bound = min(7, nmax)
    for n in range(0, bound):
        seen: Counter[str] = Counter()
        for p in paths.enumerate_dyck(n):
            kids = paths.dyck_children(p)
            if len(kids) != paths.final_descent_length(p) + 1:
                raise _Fail(p or "(empty)")
            for q in kids:
                if paths.dyck_parent(q) != p:
                    raise _Fail(f"{p} -> {q}")
                seen[q] += 1
        if set(seen) != set(paths.enumerate_dyck(n + 1)) or any(
            c != 1 for c in seen.values()
        ):
            raise _Fail(f"semilength {n + 1} not covered exactly once")
    return f"peak insertion grows each path exactly once, semilength <= {bound}"


def _check_cf_a007317(nmax: int) -> str:
    coeffs = sequences.cf_series(10, "a007317", terms=9)
    want = [sequences.a007317(i) for i in range(9)]
    if coeffs != want:
        raise _Fail(f"{coeffs} vs {want}")
    stable = sequences.cf_series(11, "a007317", terms=9)
    if stable != want:
        raise _Fail("depth 11 disagrees with depth 10")
    return "fraction expansion reproduces the transform through order 8"


def _check_cf_catalan(nmax: int) -> str:
    coeffs = sequences.cf_series(10, "catalan", terms=9)
    want = [sequences.catalan(i) for i in range(9)]
    if coeffs != want:
        raise _Fail(f"{coeffs} vs {want}")
    stable = sequences.cf_series(11, "catalan", terms=9)
    if stable != want:
        raise _Fail("depth 11 disagrees with depth 10")
    return "fraction expansion reproduces Catalan through order 8"


def _check_max_formula_bruteforce(nmax: int) -> str:
    bound = min(6, nmax)
    for pat in ((1, 2, 3, 3, 2), (1, 2, 3, 2, 1)):
        for n in range(0, bound + 1):
            dist = rgf.max_distribution(n + 1, pat)
            for k in range(0, n + 1):
                if dist.get(k + 1, 0) != sequences.max_distribution_formula(n, k):
                    raise _Fail(f"pattern {pat}, n={n + 1}, max={k + 1}")
    return f"closed form matches brute-force tables, lengths <= {bound + 1}"


_REGISTRY: tuple[tuple[str, str, Callable[[int], str]], ...] = (
    ("machine-sortable-counts-132", "machine", _check_sortable_counts_132),
    ("machine-sortable-counts-123", "machine", _check_sortable_counts_123),
    ("machine-characterization-132", "machine", _check_characterization_132),
    ("machine-class-law", "machine", _check_class_law),
    ("machine-prefix-closure", "machine", _check_prefix_closure),
    ("machine-stacksort-231", "machine", _check_stacksort_231),
    ("machine-suffix-law", "machine", _check_suffix_law),
    ("machine-trace-invariants", "machine", _check_trace_invariants),
    ("machine-fast-vs-generic", "machine", _check_fast_vs_generic),
    ("machine-stack-shape", "machine", _check_stack_shape),
    ("machine-perm-layered", "machine", _check_perm_layered),
    ("machine-perm-fast-patterns", "machine", _check_perm_fast_patterns),
    ("machine-perm-mesh-predicate", "machine", _check_perm_mesh_predicate),
    ("grid-reconstruction", "grid", _check_grid_reconstruction),
    ("grid-generator-equivalence", "grid", _check_grid_generator),
    ("grid-children-count", "grid", _check_grid_children),
    ("grid-tree-unique", "grid", _check_grid_tree_unique),
    ("grid-inversion-in-cell", "grid", _check_grid_inversion_in_cell),
    ("grid-structural-necessary", "grid", _check_grid_structural_necessary),
    ("grid-strips-colayered", "grid", _check_grid_strips_colayered),
    ("rgf-partition-roundtrip", "rgf", _check_rgf_partition_roundtrip),
    ("rgf-counts-bell", "rgf", _check_rgf_counts_bell),
    ("rgf-pattern-padding", "rgf", _check_rgf_pattern_padding),
    ("rgf-1221-wsubword", "rgf", _check_rgf_1221_wsubword),
    ("rgf-12321-stripped-test", "rgf", _check_rgf_12321_stripped_test),
    ("rgf-alpha-preserves-12321", "rgf", _check_rgf_alpha),
    ("rgf-12321-counts", "rgf", _check_rgf_12321_counts),
    ("rgf-wilf-eleven", "rgf", _check_rgf_wilf_eleven),
    ("rgf-catalan-families", "rgf", _check_rgf_catalan_families),
    ("rgf-12231-vs-2231", "rgf", _check_rgf_12231_2231),
    ("rgf-active-sites", "rgf", _check_rgf_active_sites),
    ("rgf-pruned-vs-naive", "rgf", _check_rgf_pruned_vs_naive),
    ("bij-phi-roundtrip", "bijections", _check_phi_roundtrip),
    ("bij-psi-roundtrip", "bijections", _check_psi_roundtrip),
    ("bij-beta-roundtrip", "bijections", _check_beta_roundtrip),
    ("bij-beta-reduced", "bijections", _check_beta_reduced),
    ("bij-beta-statistics", "bijections", _check_beta_statistics),
    ("bij-max-equidistribution-nine", "bijections", _check_max_equidistribution_nine),
    ("bij-ell1-equidistribution", "bijections", _check_ell1_equidistribution),
    ("bij-av321-map", "bijections", _check_av321_map),
    ("bij-gamma-roundtrip", "bijections", _check_gamma_roundtrip),
    ("bij-minima-distribution", "bijections", _check_minima_distribution),
    ("seq-dyck-counts", "sequences", _check_dyck_counts),
    ("seq-motzkin-counts", "sequences", _check_motzkin_counts),
    ("seq-labeled-motzkin-counts", "sequences", _check_labeled_motzkin_counts),
    ("seq-narayana-bruteforce", "sequences", _check_narayana_bruteforce),
    ("seq-dyck-children", "sequences", _check_dyck_children),
    ("seq-cf-a007317", "sequences", _check_cf_a007317),
    ("seq-cf-catalan", "sequences", _check_cf_catalan),
    ("seq-max-formula-bruteforce", "sequences", _check_max_formula_bruteforce),
)


def check_names(scope: str = "all") -> list[str]:
    return [name for name, s, _ in _REGISTRY if scope in ("all", s)]


def run_checks(scope: str = "all", nmax: int = 6) -> list[CheckResult]:
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    results = []
    for name, s, fn in _REGISTRY:
        if scope != "all" and s != scope:
            continue
        start = time.perf_counter()
        try:
            detail = fn(nmax)
            results.append(
                CheckResult(name, s, True, detail, time.perf_counter() - start)
            )
        except _Fail as f:
            results.append(
                CheckResult(
                    name,
                    s,
                    False,
                    "counterexample found",
                    time.perf_counter() - start,
                    f.counterexample,
                )
            )
    return results
