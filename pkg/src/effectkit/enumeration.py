"""Exhaustive isomorph-free generation of small effect algebras.

Search: the unit is pinned at index n-1 (harmless, every algebra has a
relabeling with that shape), the zero row and the unit row are forced by
the axioms, and the remaining upper-triangle cells are assigned depth
first in row-major order.  Propagation on every assignment: symmetric
storage gives commutativity, per-row value masks give cancellation and
orthosupplement uniqueness, rows are forced to keep an orthosupplement
reachable, and associativity (with definedness transfer) is re-checked
incrementally over the triples a newly decided cell can influence,
forcing further cells where the triple determines them.

Isomorph rejection: a completed table is emitted only if it is
lexicographically minimal among relabelings of the interior elements
(exactly one labeled table per class survives); emitted tables are then
keyed by their full canonical form.  Running with the minimality filter
off and deduplicating by canonical key must give the same output; tests
compare both modes.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .core import UNDEF, EffectAlgebraTable, validate
from .corpus import parse
from .lemmas import PASS, has_trivial_sharps, is_homogeneous
from .structure import canonical_form, verify_C2_C3

DEFAULT_MAX_SIZE = 8
UNASSIGNED = -2

SURVEY_COLUMNS = (
    "size",
    "total",
    "homogeneous",
    "trivial_sharp",
    "hypothesis_class",
    "theorem_verified",
    "counterexamples",
)


class SizeTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SurveyRow:
    size: int
    total: int
    homogeneous: int
    trivial_sharp: int
    hypothesis_class: int
    theorem_verified: int
    counterexamples: int

    def as_tsv(self):
        return "\t".join(str(getattr(self, c)) for c in SURVEY_COLUMNS)


def _smaller_relabeling_exists(S, n):
    one = n - 1
    for tail in permutations(range(1, one)):
        order = (0, *tail, one)
        perm = [0] * n
        for newi, old in enumerate(order):
            perm[old] = newi
        verdict = 0
        for u in range(n):
            base_new = u * n
            row_old = order[u] * n
            for w in range(n):
                v = S[row_old + order[w]]
                pv = v if v < 0 else perm[v]
                cur = S[base_new + w]
                if pv != cur:
                    verdict = -1 if pv < cur else 1
                    break
            if verdict:
                break
        if verdict < 0:
            return True
    return False


def _snapshot(S, n):
    rows = tuple(tuple(S[i * n : (i + 1) * n]) for i in range(n))
    return EffectAlgebraTable(n, n - 1, rows)


def _enumerate_tables(n, first_values=None, leaf_filter=True):
    """All valid tables with unit n-1; one per isomorphism class when
    leaf_filter is on, every labeled table otherwise."""
    one = n - 1
    S = [UNASSIGNED] * (n * n)
    used = [0] * n
    unassigned = [0] * n
    for x in range(n):
        S[x] = x
        S[x * n] = x
        used[x] |= 1 << x
    used[0] = (1 << n) - 1
    for x in range(1, n):
        S[one * n + x] = UNDEF
        S[x * n + one] = UNDEF
    cells = [i * n + j for i in range(1, one) for j in range(i, one)]
    for x in range(1, one):
        unassigned[x] = n - 2

    results = []
    if not cells:
        results.append(_snapshot(S, n))
        return results

    trail = []
    queue = []

    def find_open(r):
        base = r * n
        for c in range(1, one):
            if S[base + c] == UNASSIGNED:
                return c
        raise AssertionError("no open cell in row with positive unassigned count")

    def set_cell(i, j, v):
        pos = i * n + j
        cur = S[pos]
        if cur != UNASSIGNED:
            return cur == v
        if v != UNDEF:
            if v == i or v == j or v <= 0:
                return False
            if (used[i] >> v) & 1 or (used[j] >> v) & 1:
                return False
            used[i] |= 1 << v
            if i != j:
                used[j] |= 1 << v
        S[pos] = v
        S[j * n + i] = v
        trail.append(pos)
        unassigned[i] -= 1
        if i != j:
            unassigned[j] -= 1
        queue.append(pos)
        for r in (i,) if i == j else (i, j):
            if not (used[r] >> one) & 1:
                rem = unassigned[r]
                if rem == 0:
                    return False
                if rem == 1 and not set_cell(r, find_open(r), one):
                    return False
        return True

    def check(a, b, c):
        # whenever b+c and a+(b+c) are defined, (a+b)+c must be defined and
        # equal; covers the symmetric reading via commutative storage.
        bc = S[b * n + c]
        if bc < 0:
            return True
        abc = S[a * n + bc]
        if abc == UNASSIGNED:
            return True
        ab = S[a * n + b]
        if abc >= 0:
            if ab == UNDEF:
                return False
            if ab == UNASSIGNED:
                return True
            fc = S[ab * n + c]
            if fc == UNASSIGNED:
                return set_cell(ab, c, abc)
            return fc == abc
        if ab >= 0:
            fc = S[ab * n + c]
            if fc >= 0:
                return False
            if fc == UNASSIGNED:
                return set_cell(ab, c, UNDEF)
        return True

    def propagate():
        while queue:
            pos = queue.pop()
            i, j = divmod(pos, n)
            for t in range(1, one):
                if not (check(t, i, j) and check(i, j, t)):
                    return False
                if i != j and not (check(t, j, i) and check(j, i, t)):
                    return False
            for b in range(1, one):
                base = b * n
                for c in range(1, one):
                    w = S[base + c]
                    if w == j:
                        if not (check(i, b, c) and check(b, c, i)):
                            return False
                    elif w == i and i != j:
                        if not (check(j, b, c) and check(b, c, j)):
                            return False
        return True

    last = len(cells)
    first_domain = None if first_values is None else tuple(first_values)

    def dfs(idx):
        while idx < last and S[cells[idx]] != UNASSIGNED:
            idx += 1
        if idx == last:
            if not leaf_filter or not _smaller_relabeling_exists(S, n):
                results.append(_snapshot(S, n))
            return
        pos = cells[idx]
        i, j = divmod(pos, n)
        if idx == 0 and first_domain is not None:
            domain = first_domain
        else:
            taken = used[i] | used[j]
            domain = (UNDEF, *(k for k in range(1, n) if not (taken >> k) & 1))
        for v in domain:
            mark = len(trail)
            queue.clear()
            if set_cell(i, j, v) and propagate():
                dfs(idx + 1)
            while len(trail) > mark:
                p = trail.pop()
                a, b = divmod(p, n)
                w = S[p]
                S[p] = UNASSIGNED
                S[b * n + a] = UNASSIGNED
                if w >= 0:
                    used[a] &= ~(1 << w)
                    if a != b:
                        used[b] &= ~(1 << w)
                unassigned[a] += 1
                if a != b:
                    unassigned[b] += 1
        queue.clear()

    dfs(0)
    return results


def _enumeration_worker(args):
    n, values, leaf_filter = args
    return [canonical_form(t) for t in _enumerate_tables(n, values, leaf_filter)]


def enumerate_all(n, max_size=None, parallel=1, leaf_filter=True):
    """Canonical keys of every isomorphism class of size-n effect algebras,
    sorted; deterministic including under parallel partitioning."""
    cap = DEFAULT_MAX_SIZE if max_size is None else max_size
    if n < 2:
        raise ValueError("effect algebras have at least two elements")
    if n > cap:
        raise SizeTooLarge(f"size {n} above configured cap {cap}")
    if parallel > 1 and n >= 3:
        domain = (UNDEF, *range(2, n))  # choices for the first cell (1, 1)
        chunks = [domain[k::parallel] for k in range(parallel)]
        chunks = [c for c in chunks if c]
        keys = set()
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            args = [(n, chunk, leaf_filter) for chunk in chunks]
            for part in pool.map(_enumeration_worker, args):
                keys.update(part)
        return sorted(keys)
    tables = _enumerate_tables(n, None, leaf_filter)
    keys = {canonical_form(t) for t in tables}
    if leaf_filter:
        assert len(keys) == len(tables), "minimality filter emitted a duplicate"
    return sorted(keys)


def algebras_of_size(n, **kwargs):
    return [validate(parse(key)) for key in enumerate_all(n, **kwargs)]


def survey_row(n, keys):
    """Aggregate the structure-theorem flags over one size's canonical keys."""
    homog = trivial = hyp = verified = 0
    for key in keys:
        e = validate(parse(key))
        h = is_homogeneous(e)
        t = has_trivial_sharps(e)
        homog += h
        trivial += t
        if h and t:
            hyp += 1
            c2, c3 = verify_C2_C3(e)
            if c2.verdict == PASS and c3.verdict == PASS:
                verified += 1
    return SurveyRow(
        size=n,
        total=len(keys),
        homogeneous=homog,
        trivial_sharp=trivial,
        hypothesis_class=hyp,
        theorem_verified=verified,
        counterexamples=hyp - verified,
    )


def survey(max_n, max_size=None, parallel=1):
    """One row per size 2..max_n aggregating the structure-theorem flags."""
    return [
        survey_row(n, enumerate_all(n, max_size=max_size, parallel=parallel))
        for n in range(2, max_n + 1)
    ]


@dataclass(frozen=True)
class CounterexampleSearch:
    """Smallest instances located by scanning the enumerated universe."""

    theorem: EffectAlgebraTable | None
    non_homogeneous: EffectAlgebraTable | None
    non_homogeneous_trivial_sharp: EffectAlgebraTable | None
    non_lattice: EffectAlgebraTable | None


def find_counterexample(max_n, max_size=None, parallel=1):
    """Search sizes 2..max_n for a theorem counterexample (none expected) and
    for the smallest non-homogeneous / non-lattice fixtures."""
    theorem = non_homog = non_homog_trivial = non_lattice = None
    for n in range(2, max_n + 1):
        if theorem and non_homog and non_homog_trivial and non_lattice:
            break
        for key in enumerate_all(n, max_size=max_size, parallel=parallel):
            e = validate(parse(key))
            h = is_homogeneous(e)
            t = has_trivial_sharps(e)
            if non_homog is None and not h:
                non_homog = e.table
            if non_homog_trivial is None and not h and t:
                non_homog_trivial = e.table
            if non_lattice is None and not e.is_lattice:
                non_lattice = e.table
            if theorem is None and h and t:
                c2, c3 = verify_C2_C3(e)
                if c2.verdict != PASS or c3.verdict != PASS:
                    theorem = e.table
    return CounterexampleSearch(
        theorem=theorem,
        non_homogeneous=non_homog,
        non_homogeneous_trivial_sharp=non_homog_trivial,
        non_lattice=non_lattice,
    )


def write_enumeration(out_dir, max_n, max_size=None, parallel=1):
    """Persist canonical tables plus survey.tsv under out_dir; returns rows."""
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    for n in range(2, max_n + 1):
        keys = enumerate_all(n, max_size=max_size, parallel=parallel)
        size_dir = os.path.join(out_dir, f"size_{n}")
        os.makedirs(size_dir, exist_ok=True)
        for idx, key in enumerate(keys):
            with open(os.path.join(size_dir, f"{idx:04d}.json"), "wb") as fh:
                fh.write(key)
        rows.append(survey_row(n, keys))
    with open(os.path.join(out_dir, "survey.tsv"), "w", encoding="ascii") as fh:
        fh.write("\t".join(SURVEY_COLUMNS) + "\n")
        for row in rows:
            fh.write(row.as_tsv() + "\n")
    return rows
