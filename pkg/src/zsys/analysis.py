"""Group-theoretic analysis on window groups: subgroup calculus, lower central
and derived series, nilpotency class, lower cutoff, the abelian criterion,
shift-invariant closures, lemma property checks, and the exhaustive search
over shift-invariant commutation tables.

Subgroups are materialized element sets (windows at desk scale are small);
series terms are generated through normal closures of generator commutators,
which agrees with the brute-force double-loop definition and is checked
against it in the tests.
"""

from __future__ import annotations

import itertools
import random
from collections import namedtuple

from .matgroup import commutator as mat_commutator
from .zsystem import CapExceeded, WindowGroup, closure, verify_zs_axioms

CutoffResult = namedtuple("CutoffResult", ["value", "witness"])


class Subgroup:
    """A subgroup of a window group as an explicit, enumerated element set."""

    def __init__(self, window: WindowGroup, generators, elements):
        self.window = window
        self.generators = tuple(generators)
        self.elements = frozenset(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, vec) -> bool:
        return tuple(vec) in self.elements

    def is_trivial(self) -> bool:
        return self.order == 1

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        return self.elements < other.elements

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def sorted_elements(self) -> list:
        return sorted(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.window!r})"


def generate(wg: WindowGroup, gen_vecs, cap=None) -> Subgroup:
    """BFS closure of the generating vectors."""
    gens = [tuple(v) for v in gen_vecs]
    return Subgroup(wg, gens, closure(wg, gens, cap))


def whole_group(wg: WindowGroup, cap=None) -> Subgroup:
    return generate(wg, [wg.gen_vec(i) for i in wg.indices()], cap)


def normal_closure(wg: WindowGroup, gen_vecs, cap=None) -> Subgroup:
    """Smallest subgroup containing the seeds and closed under conjugation by
    the window generators (hence by the whole group)."""
    seeds = [tuple(v) for v in gen_vecs]
    gens = {v for v in seeds if v != wg.identity_vec}
    window_gens = [wg.gen_vec(i) for i in wg.indices()]
    while True:
        elements = closure(wg, sorted(gens), cap)
        new = set()
        for v in sorted(gens):
            for g in window_gens:
                w = wg.conj_vec(v, g)
                if w not in elements:
                    new.add(w)
        if not new:
            return Subgroup(wg, sorted(gens), elements)
        gens |= new


def commutator_subgroup(wg: WindowGroup, a: Subgroup, b: Subgroup, cap=None) -> Subgroup:
    """Brute-force [A, B]: all commutators over the two element sets, closed."""
    comms = {
        wg.comm_vec(x, y) for x in a.elements for y in b.elements
    } - {wg.identity_vec}
    return generate(wg, sorted(comms), cap)


def _commutator_normal_closure(wg, a_gens, b_gens, cap=None) -> Subgroup:
    """[<A>, <B>] as the normal closure of pairwise generator commutators;
    valid when the result is normalized by the window group (always the case
    for terms of the lower central and derived series)."""
    comms = {wg.comm_vec(x, y) for x in a_gens for y in b_gens} - {wg.identity_vec}
    return normal_closure(wg, sorted(comms), cap)


def derived_subgroup(wg: WindowGroup, cap=None) -> Subgroup:
    gens = [wg.gen_vec(i) for i in wg.indices()]
    return _commutator_normal_closure(wg, gens, gens, cap)


def lower_central_series(wg: WindowGroup, cap=None) -> list:
    """[X, X'=gamma_2, gamma_3, ...] down to the trivial subgroup.  The first
    term stands for the whole group and is not materialized."""
    window_gens = [wg.gen_vec(i) for i in wg.indices()]
    series = [None]  # placeholder for the whole group
    current = derived_subgroup(wg, cap)
    series.append(current)
    steps = 0
    while not current.is_trivial():
        steps += 1
        if steps > wg.width + 1:
            raise RuntimeError("lower central series does not descend; table is inconsistent")
        current = _commutator_normal_closure(wg, current.sorted_elements(), window_gens, cap)
        series.append(current)
    return series


def derived_series(wg: WindowGroup, cap=None) -> list:
    series = [None]
    current = derived_subgroup(wg, cap)
    series.append(current)
    steps = 0
    while not current.is_trivial():
        steps += 1
        if steps > wg.width + 1:
            raise RuntimeError("derived series does not descend; table is inconsistent")
        gens = current.sorted_elements()
        comms = {wg.comm_vec(x, y) for x in gens for y in gens} - {wg.identity_vec}
        nxt = Subgroup(wg, sorted(comms), closure(wg, sorted(comms), cap))
        if not nxt.elements < current.elements and not nxt.is_trivial():
            raise RuntimeError("derived series does not descend; table is inconsistent")
        current = nxt
        series.append(current)
    return series


def nilpotency_class(wg: WindowGroup, cap=None) -> int:
    """Length of the lower central series to triviality (1 for abelian)."""
    return len(lower_central_series(wg, cap)) - 1


def is_abelian_table(wg: WindowGroup) -> bool:
    return wg.is_abelian()


def lower_cutoff(target, bound: int) -> CutoffResult:
    """Least distance |m - n| with a nontrivial commutator, scanned in
    increasing distance; None value means abelian within the bound.

    For a WindowGroup the comm table is scanned.  For a matrix example the
    commutator [u_n, u_{n+d}] is computed directly for n in {0, 1}, which
    covers all pairs by shift invariance.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if isinstance(target, WindowGroup):
        for d in range(1, bound + 1):
            for i in range(target.lo, target.hi + 1 - d):
                if target.comm.get((i, i + d)):
                    return CutoffResult(d, (i, i + d))
        return CutoffResult(None, None)
    for d in range(1, bound + 1):
        for n in (0, 1):
            c = mat_commutator(target.u(n, 1), target.u(n + d, 1))
            if not c.is_identity():
                return CutoffResult(d, (n, n + d))
    return CutoffResult(None, None)


def single_shift_extends(wg: WindowGroup) -> bool:
    """Whether the table is invariant under translating all indices by one,
    wherever both sides are in range (the window-scale meaning of the map
    x_k -> x_{k+1} extending to an automorphism)."""
    for i in wg.indices():
        for j in range(i + 1, wg.hi + 1):
            if j + 1 > wg.hi:
                continue
            shifted = {k + 1: e for k, e in wg.comm.get((i, j), {}).items()}
            if wg.comm.get((i + 1, j + 1), {}) != shifted:
                return False
    return True


def shift_invariant_closure(wg: WindowGroup, a_vec, b_vec, cap=None):
    """Subgroup generated by every in-window translate of the two seeds, with
    the parity split of the occurring start indices."""
    gens = []
    for vec in (tuple(a_vec), tuple(b_vec)):
        support = [idx for idx, e in zip(wg.indices(), vec) if e]
        if not support:
            continue
        k = -((support[0] - wg.lo) // 2)  # least k keeping the support above lo
        while support[-1] + 2 * k <= wg.hi:
            gens.append(wg.shift_vec(vec, k))
            k += 1
    sub = generate(wg, gens, cap)
    starts = {wg.stats_vec(v).start for v in sub.elements if v != wg.identity_vec}
    info = {
        "even_start_nonempty": any(s % 2 == 0 for s in starts),
        "odd_start_nonempty": any(s % 2 == 1 for s in starts),
        "start_indices": sorted(starts),
    }
    return sub, info


def lemma_checks(wg: WindowGroup, cap=None, trials: int = 50, seed: int = 0) -> dict:
    """Window-scale property checks: cutoff alternation, bilinearity of
    commutation modulo the second lower-central term, strict shrinking of
    [V, X] inside each series term, and the abelian criterion."""
    rng = random.Random(seed)
    checks = {}

    cut = lower_cutoff(wg, max(wg.width - 1, 1))
    entry = {"pass": True, "cutoff": cut.value}
    if cut.value is not None:
        d = cut.value
        even_hit = [
            (i, i + d)
            for i in range(wg.lo, wg.hi + 1 - d)
            if i % 2 == 0 and wg.comm.get((i, i + d))
        ]
        odd_hit = [
            (i, i + d)
            for i in range(wg.lo, wg.hi + 1 - d)
            if i % 2 == 1 and wg.comm.get((i, i + d))
        ]
        entry["pass"] = not (even_hit and odd_hit)
        entry["even_start_pairs"] = even_hit
        entry["odd_start_pairs"] = odd_hit
    checks["cutoff_alternation"] = entry

    window_gens = [wg.gen_vec(i) for i in wg.indices()]
    try:
        derived = derived_subgroup(wg, cap)
        yx = _commutator_normal_closure(wg, derived.sorted_elements(), window_gens, cap)
        yxx = _commutator_normal_closure(wg, yx.sorted_elements(), window_gens, cap)
        ok = True
        witness = None
        dsorted = derived.sorted_elements()
        for _ in range(trials):
            y = dsorted[rng.randrange(len(dsorted))]
            y2 = dsorted[rng.randrange(len(dsorted))]
            x = tuple(rng.randrange(wg.p) for _ in range(wg.width))
            lhs = wg.comm_vec(wg.mul_vec(y, y2), x)
            base = wg.mul_vec(wg.comm_vec(y, x), wg.comm_vec(y2, x))
            if wg.mul_vec(wg.inv_vec(base), lhs) not in yxx.elements:
                ok = False
                witness = {"y": list(y), "y2": list(y2), "x": list(x)}
                break
        checks["commutator_bilinearity"] = {"pass": ok, "trials": trials}
        if witness:
            checks["commutator_bilinearity"]["witness"] = witness
    except CapExceeded:
        raise
    except RuntimeError as err:
        checks["commutator_bilinearity"] = {"pass": False, "error": str(err)}

    try:
        series = lower_central_series(wg, cap)
        derived = series[1]
        ok = True
        witness = None
        for term in series[1:]:
            if term.is_trivial():
                continue
            image = _commutator_normal_closure(wg, term.sorted_elements(), window_gens, cap)
            if not (image.elements < term.elements):
                ok = False
                witness = {"term_order": term.order, "image_order": image.order}
                break
        # the whole group itself also shrinks: [X, X] is proper
        if ok and not derived.is_trivial() and derived.order >= wg.order:
            ok = False
            witness = {"term_order": wg.order, "image_order": derived.order}
        checks["commutator_image_proper"] = {"pass": ok}
        if witness:
            checks["commutator_image_proper"]["witness"] = witness
    except CapExceeded:
        raise
    except RuntimeError as err:
        checks["commutator_image_proper"] = {"pass": False, "error": str(err)}

    checks["abelian_iff_unit_shift"] = {
        "pass": wg.is_abelian() == single_shift_extends(wg),
        "abelian": wg.is_abelian(),
        "unit_shift_invariant": single_shift_extends(wg),
    }

    return {
        "p": wg.p,
        "lo": wg.lo,
        "hi": wg.hi,
        "checks": checks,
        "pass": all(c["pass"] for c in checks.values()),
    }


# -- search over shift-invariant tables -------------------------------------


def _word_choices(p: int, i: int, j: int, support_bound: int) -> list:
    """All interior words for pair (i, j) with at most support_bound nonzero
    entries, in lexicographic order of the exponent tuple."""
    positions = list(range(i + 1, j))
    out = []
    for tup in itertools.product(range(p), repeat=len(positions)):
        nonzero = [(k, e) for k, e in zip(positions, tup) if e]
        if len(nonzero) <= support_bound:
            out.append(dict(nonzero))
    return out


def _free_reps(lo: int, hi: int) -> list:
    """Orbit representatives of pairs under index translation by 2, ordered by
    (distance, start); every in-window pair is a translate of exactly one."""
    reps = []
    for d in range(2, hi - lo + 1):
        for i0 in (lo, lo + 1):
            if i0 + d <= hi:
                reps.append((i0, i0 + d))
    return reps


def _propagate(lo: int, hi: int, rep_words: dict) -> dict:
    """Spread each anchored representative word over its whole translation
    orbit within the window."""
    table = {}
    for (i0, j0), word in rep_words.items():
        if not word:
            continue
        shift = 0
        while j0 + shift <= hi:
            table[(i0 + shift, j0 + shift)] = {pos + shift: e for pos, e in word.items()}
            shift += 2
    return table


def _orbit_key(i: int, j: int, lo: int) -> tuple:
    return (j - i, (i - lo) % 2)


def search_tables(
    p: int,
    lo: int,
    hi: int,
    support_bound: int,
    cap=None,
    extend_depth: int = 1,
):
    """Enumerate all shift-invariant interior comm tables on the window, in a
    fixed lexicographic order; for each consistent one report its nilpotency
    class and whether some one-step widening stays consistent.

    Yields dicts {"table": ..., "class": ..., "extendable": ...}.
    """
    if p not in (2, 3, 5):
        raise ValueError(f"search supports p in (2, 3, 5), got {p}")
    if hi - lo + 1 > 8:
        raise ValueError(f"search window width is capped at 8, got {hi - lo + 1}")
    if support_bound < 0:
        raise ValueError("support bound must be nonnegative")
    reps = _free_reps(lo, hi)
    choice_lists = [_word_choices(p, i, j, support_bound) for i, j in reps]
    for assignment in itertools.product(*choice_lists):
        rep_words = dict(zip(reps, assignment))
        wg = WindowGroup(p, lo, hi, _propagate(lo, hi, rep_words))
        report = verify_zs_axioms(wg, cap)
        if not report["pass"]:
            continue
        cls = nilpotency_class(wg, cap)
        ext = extendable(wg, support_bound, extend_depth)
        yield {"table": wg.to_json_dict(), "class": cls, "extendable": ext}


def extendable(wg: WindowGroup, support_bound: int, depth: int = 1) -> bool:
    """Whether the table admits a chain of `depth` consistent shift-invariant
    one-step widenings to [lo-1, hi+1], [lo-2, hi+2], ..."""
    if depth <= 0:
        return True
    for ext in _consistent_extensions(wg, support_bound):
        if extendable(ext, support_bound, depth - 1):
            return True
    return False


def _boundary_checks(lo2: int, hi2: int) -> list:
    """Overlap checks of the widened window that involve a boundary index;
    interior ones already hold because the base table is consistent.  Each
    check carries the set of orbit keys its collection may touch (all pairs
    inside its index interval)."""

    def span(a, b):
        return {
            _orbit_key(x, y, lo2) for x in range(a, b + 1) for y in range(x + 1, b + 1)
        }

    checks = []
    for i in range(lo2, hi2 + 1):
        for j in range(i + 1, hi2 + 1):
            if i == lo2 or j == hi2:
                checks.append(("power", (j, i), span(i, j)))
            for k in range(j + 1, hi2 + 1):
                if i == lo2 or k == hi2:
                    checks.append(("triple", (k, j, i), span(i, k)))
    return checks


def _run_check(wg: WindowGroup, check) -> bool:
    kind, idxs = check[0], check[1]
    p = wg.p
    if kind == "power":
        j, i = idxs
        gi, gj = wg.gen_vec(i), wg.gen_vec(j)
        ji = wg.mul_vec(gj, gi)
        return (
            wg.mul_vec(wg.pow_vec(gj, p - 1), ji) == gi
            and wg.mul_vec(ji, wg.pow_vec(gi, p - 1)) == gj
        )
    k, j, i = idxs
    gk, gj, gi = wg.gen_vec(k), wg.gen_vec(j), wg.gen_vec(i)
    return wg.mul_vec(wg.mul_vec(gk, gj), gi) == wg.mul_vec(gk, wg.mul_vec(gj, gi))


def _consistent_extensions(wg: WindowGroup, support_bound: int):
    """Yield consistent shift-invariant widenings of the table to
    [lo-1, hi+1], via backtracking over the newly free orbit representatives
    with incremental overlap pruning."""
    lo, hi = wg.lo, wg.hi
    lo2, hi2 = lo - 1, hi + 1

    forced_orbits = {}
    for i0, j0 in _free_reps(lo, hi):
        forced_orbits[_orbit_key(i0, j0, lo2)] = (i0, wg.comm.get((i0, j0), {}))
    # distance-1 pairs are forced empty
    forced_orbits[(1, 0)] = (lo2, {})
    forced_orbits[(1, 1)] = (lo2 + 1, {})

    new_reps = [
        (i0, j0)
        for i0, j0 in _free_reps(lo2, hi2)
        if _orbit_key(i0, j0, lo2) not in forced_orbits
    ]
    choice_lists = [_word_choices(wg.p, i, j, support_bound) for i, j in new_reps]

    all_checks = _boundary_checks(lo2, hi2)
    keys_available = set(forced_orbits)
    levels = [[] for _ in range(len(new_reps) + 1)]
    for check in all_checks:
        needed = check[2] - keys_available
        if not needed:
            levels[0].append(check)
            continue
        last = max(
            idx for idx, rep in enumerate(new_reps) if _orbit_key(*rep, lo2) in needed
        )
        levels[last + 1].append(check)

    def build(words_by_orbit) -> WindowGroup:
        table = {}
        for key, (anchor_i, word) in words_by_orbit.items():
            d = key[0]
            if not word:
                continue
            i0 = anchor_i
            while i0 - 2 >= lo2:
                i0 -= 2
            for i in range(i0, hi2 + 1, 2):
                j = i + d
                if j > hi2:
                    break
                if i < lo2:
                    continue
                table[(i, j)] = {k + (i - anchor_i): e for k, e in word.items()}
        return WindowGroup(wg.p, lo2, hi2, table)

    assigned = dict(forced_orbits)

    def rec(idx: int):
        candidate = build(assigned)
        if not all(_run_check(candidate, c) for c in levels[idx]):
            return
        if idx == len(new_reps):
            yield candidate
            return
        i0, j0 = new_reps[idx]
        key = _orbit_key(i0, j0, lo2)
        for word in choice_lists[idx]:
            assigned[key] = (i0, word)
            yield from rec(idx + 1)
        del assigned[key]

    yield from rec(0)
