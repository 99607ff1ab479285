"""Exhaustive enumeration of CL-algebras up to isomorphism.

Lattices are generated with a naturally-labeled DFS: element 0 is the
bottom, element n-1 the top, labels form a linear extension, and every
prefix must already be a meet-semilattice (prefixes of lattices are
meet-closed, and a finite meet-semilattice with a top is a lattice, so
the incremental meet check loses nothing).  Each lattice is then
canonically relabeled and deduplicated.

Completions fill a commutative fusion table by backtracking.  The unit
row is fixed, the bottom row is forced to bottom (residuation plus the
least element leave no other choice), commutativity halves the table,
and partial tables are pruned by monotonicity, partial associativity
and partial join-distribution.  Completed tables get a cheap
negation-column involution filter before the implication table is
derived, and every survivor is sealed by the full validator.

Isomorphism handling: a fingerprint is minimized over all permutations
consistent with an iso-invariant coloring (refined from order, table
and designation profiles), so equal fingerprints mean isomorphic via a
bijection preserving order, both tables, bot, zero and one.  Output
order is canonical, independent of discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import permutations, product

from .core import (
    AlgebraCandidate,
    AlgebraError,
    FiniteCLAlgebra,
    NoResidual,
    NotALattice,
    OrderRelation,
    derive_implication,
    iter_bits,
    popcount,
)
from .validator import validate

SIZE_MIN = 2
SIZE_MAX = 8


class SizeOutOfRange(AlgebraError):
    pass


def _check_size(n: int) -> None:
    if not SIZE_MIN <= n <= SIZE_MAX:
        raise SizeOutOfRange(f"size must be in [{SIZE_MIN}, {SIZE_MAX}], got {n}")


@dataclass(frozen=True)
class SearchConfig:
    size: int
    max_results: int | None = None
    count_only: bool = False
    lattice: OrderRelation | None = None


@dataclass(frozen=True)
class CensusRow:
    size: int
    lattice_index: int
    count: int


@dataclass(frozen=True)
class SearchResult:
    rows: tuple[CensusRow, ...]
    algebras: tuple[FiniteCLAlgebra, ...]

    @property
    def total(self) -> int:
        return sum(r.count for r in self.rows)


def _refine(n: int, keys, neighbor_sig) -> list[int]:
    """Iterated partition refinement; colors only depend on iso-invariants."""
    ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
    col = [ranks[k] for k in keys]
    while True:
        sig = [(col[i], neighbor_sig(i, col)) for i in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(col)):
            return new
        col = new


def _color_consistent_perms(colors):
    """Permutations pi (new index -> old element) listing elements in
    nondecreasing color, all arrangements within equal-color blocks."""
    n = len(colors)
    ordered = sorted(range(n), key=lambda i: (colors[i], i))
    blocks = []
    i = 0
    while i < n:
        j = i
        while j < n and colors[ordered[j]] == colors[ordered[i]]:
            j += 1
        blocks.append(ordered[i:j])
        i = j
    for parts in product(*[permutations(b) for b in blocks]):
        yield tuple(x for part in parts for x in part)


def _order_colors(order: OrderRelation) -> list[int]:
    n = order.n
    keys = [(popcount(order.dn[i]), popcount(order.up[i])) for i in range(n)]

    def sig(i, col):
        below = tuple(sorted(col[j] for j in iter_bits(order.dn[i] & ~(1 << i))))
        above = tuple(sorted(col[j] for j in iter_bits(order.up[i] & ~(1 << i))))
        return (below, above)

    return _refine(n, keys, sig)


def canonical_order_masks(order: OrderRelation) -> tuple[int, ...]:
    """Lex-least up-mask encoding over color-consistent relabelings."""
    n = order.n
    colors = _order_colors(order)
    best = None
    for pi in _color_consistent_perms(colors):
        pos = [0] * n
        for newi, old in enumerate(pi):
            pos[old] = newi
        enc = []
        for newi in range(n):
            mask = 0
            for old in iter_bits(order.up[pi[newi]]):
                mask |= 1 << pos[old]
            enc.append(mask)
        enc = tuple(enc)
        if best is None or enc < best:
            best = enc
    return best


def enumerate_lattices(n: int) -> list[OrderRelation]:
    """All lattices on n elements up to order-isomorphism, canonically
    relabeled and sorted."""
    _check_size(n)
    seen = set()
    for dnmasks in _natural_lattice_downmasks(n):
        up = [0] * n
        for y in range(n):
            for x in iter_bits(dnmasks[y]):
                up[x] |= 1 << y
        seen.add(canonical_order_masks(OrderRelation(n, tuple(up))))
    return [OrderRelation(n, key) for key in sorted(seen)]


def _natural_lattice_downmasks(n: int):
    """Yield dn-mask tuples of all naturally labeled lattices on n elements."""
    out = []
    dn = [1]

    def choices(i):
        res = []
        for mask in range(1, 1 << i, 2):  # bottom always below: bit 0 set
            if all(dn[j] & ~mask == 0 for j in iter_bits(mask)):
                res.append(mask)
        return res

    def meets_ok(i, dmask):
        my = dmask | (1 << i)
        for x in range(i):
            lb = dn[x] & my
            if not any(lb & ~dn[g] == 0 for g in iter_bits(lb)):
                return False
        return True

    def rec(i):
        if i == n:
            out.append(tuple(dn))
            return
        opts = [(1 << i) - 1] if i == n - 1 else choices(i)
        for dmask in opts:
            if meets_ok(i, dmask):
                dn.append(dmask | (1 << i))
                rec(i + 1)
                dn.pop()

    rec(1)
    return out


def canonical_form(alg: FiniteCLAlgebra) -> tuple:
    """Isomorphism-invariant fingerprint of a sealed algebra.

    Equal forms mean there is a bijection preserving order, mult, imp,
    bot, zero and one.
    """
    n = alg.n
    order = alg.order
    mult = alg.mult_table
    imp = alg.imp_table
    keys = [
        (popcount(order.dn[i]), popcount(order.up[i]), i == alg.zero, i == alg.one)
        for i in range(n)
    ]

    def sig(i, col):
        below = tuple(sorted(col[j] for j in iter_bits(order.dn[i] & ~(1 << i))))
        above = tuple(sorted(col[j] for j in iter_bits(order.up[i] & ~(1 << i))))
        mrow = tuple(sorted((col[j], col[mult[i][j]]) for j in range(n)))
        irow = tuple(sorted((col[j], col[imp[i][j]]) for j in range(n)))
        return (below, above, mrow, irow)

    colors = _refine(n, keys, sig)
    best = None
    for pi in _color_consistent_perms(colors):
        pos = [0] * n
        for newi, old in enumerate(pi):
            pos[old] = newi
        enc_order = []
        for newi in range(n):
            mask = 0
            for old in iter_bits(order.up[pi[newi]]):
                mask |= 1 << pos[old]
            enc_order.append(mask)
        enc_mult = tuple(
            pos[mult[pi[x]][pi[y]]] for x in range(n) for y in range(n)
        )
        enc_imp = tuple(
            pos[imp[pi[x]][pi[y]]] for x in range(n) for y in range(n)
        )
        enc = (n, tuple(enc_order), pos[alg.bot], pos[alg.zero], pos[alg.one],
               enc_mult, enc_imp)
        if best is None or enc < best:
            best = enc
    return best


def complete_to_cl(order: OrderRelation, zero: int, one: int,
                   name_prefix: str | None = None) -> list[FiniteCLAlgebra]:
    """All CL-algebras on a labeled lattice with the given zero and one.

    Returns raw completions (not deduplicated by isomorphism) in a
    deterministic backtracking order; every result is validator-sealed.
    """
    n = order.n
    for label, v in (("zero", zero), ("one", one)):
        if not 0 <= v < n:
            raise ValueError(f"{label} index {v} out of range")
    bot = order.least()
    if bot is None:
        raise ValueError("order has no least element")
    if name_prefix is None:
        name_prefix = f"cl{n}_z{zero}_u{one}"

    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            g = order.lub(x, y)
            if g is None:
                raise NotALattice(x, y, "join")
            join[x][y] = g

    elements = tuple(f"e{i}" for i in range(n))
    results: list[FiniteCLAlgebra] = []

    if n == 1:
        cand = AlgebraCandidate(
            name=f"{name_prefix}_0", elements=elements, order=order,
            mult_table=((0,),), imp_table=None, bot=0, zero=0, one=0,
        )
        report = validate(cand)
        assert report.algebra is not None
        return [report.algebra]

    if one == bot:
        return []  # the unit row must be the identity, the bottom row constant

    tab: list[list[int | None]] = [[None] * n for _ in range(n)]
    for x in range(n):
        tab[bot][x] = tab[x][bot] = bot
    for x in range(n):
        cur = tab[one][x]
        if cur is not None and cur != x:
            return []
        tab[one][x] = tab[x][one] = x

    cells = [
        (x, y)
        for x in range(n)
        for y in range(x, n)
        if x != bot and x != one and y != bot and y != one
    ]
    up = order.up
    dn = order.dn
    zero_dn = dn[zero]

    def value_ok(x, y, v):
        # monotonicity of the partial table against every filled cell
        for p in range(n):
            rowp = tab[p]
            p_le_x = dn[x] >> p & 1
            x_le_p = up[x] >> p & 1
            for q in range(n):
                w = rowp[q]
                if w is None:
                    continue
                if p_le_x and dn[y] >> q & 1 and not up[w] >> v & 1:
                    return False
                if x_le_p and up[y] >> q & 1 and not up[v] >> w & 1:
                    return False
        return True

    def partial_ok():
        for p in range(n):
            tp = tab[p]
            for q in range(n):
                v1 = tp[q]
                if v1 is None:
                    continue
                t1 = tab[v1]
                tq = tab[q]
                for r in range(n):
                    a = t1[r]
                    if a is None:
                        continue
                    w1 = tq[r]
                    if w1 is None:
                        continue
                    b = tp[w1]
                    if b is None:
                        continue
                    if a != b:
                        return False
        for p in range(n):
            tp = tab[p]
            for q in range(n):
                v1 = tp[q]
                if v1 is None:
                    continue
                jq = join[q]
                for r in range(q, n):
                    v2 = tp[r]
                    if v2 is None:
                        continue
                    v3 = tp[jq[r]]
                    if v3 is None:
                        continue
                    if v3 != join[v1][v2]:
                        return False
        return True

    def finish():
        # negation column + involution: cheap, happens before deriving imp
        negcol = [0] * n
        for x in range(n):
            s = 0
            rowx = tab[x]
            for z in range(n):
                if zero_dn >> rowx[z] & 1:
                    s |= 1 << z
            g = order.greatest_in(s)
            if g is None:
                return
            negcol[x] = g
        for x in range(n):
            if negcol[negcol[x]] != x:
                return
        mult = tuple(tuple(row) for row in tab)
        try:
            imp = derive_implication(order, mult)
        except NoResidual:
            return
        cand = AlgebraCandidate(
            name=f"{name_prefix}_{len(results)}", elements=elements,
            order=order, mult_table=mult, imp_table=imp,
            bot=bot, zero=zero, one=one,
        )
        report = validate(cand)
        if report.algebra is not None:
            results.append(report.algebra)

    def dfs(k):
        if k == len(cells):
            finish()
            return
        x, y = cells[k]
        for v in range(n):
            if value_ok(x, y, v):
                tab[x][y] = v
                tab[y][x] = v
                if partial_ok():
                    dfs(k + 1)
                tab[x][y] = None
                if x != y:
                    tab[y][x] = None

    dfs(0)
    return results


def _self_dual_profile(order: OrderRelation) -> bool:
    # involution is an order anti-automorphism, so the degree profile
    # must be symmetric or no completion can exist
    prof = sorted((popcount(order.dn[i]), popcount(order.up[i])) for i in range(order.n))
    dual = sorted((popcount(order.up[i]), popcount(order.dn[i])) for i in range(order.n))
    return prof == dual


def run_search(config: SearchConfig) -> SearchResult:
    """Census over all lattices of the configured size (or the fixed
    one), deduplicating by canonical form; deterministic output."""
    n = config.size
    _check_size(n)
    if config.lattice is not None:
        if config.lattice.n != n:
            raise ValueError("fixed lattice size does not match config size")
        lattices = [config.lattice]
    else:
        lattices = enumerate_lattices(n)

    rows = []
    algebras: list[FiniteCLAlgebra] = []
    for li, lat in enumerate(lattices):
        found: dict[tuple, FiniteCLAlgebra] = {}
        if _self_dual_profile(lat):
            bot = lat.least()
            for zero in range(n):
                for one in range(n):
                    if one == bot:
                        continue
                    # negation swaps zero and one and inverts the order
                    if popcount(lat.up[one]) != popcount(lat.dn[zero]):
                        continue
                    if popcount(lat.dn[one]) != popcount(lat.up[zero]):
                        continue
                    prefix = f"cl{n}_l{li}_z{zero}_u{one}"
                    for alg in complete_to_cl(lat, zero, one, prefix):
                        key = canonical_form(alg)
                        if key not in found:
                            found[key] = alg
        rows.append(CensusRow(n, li, len(found)))
        if not config.count_only:
            for key in sorted(found):
                algebras.append(found[key])
    if config.max_results is not None:
        algebras = algebras[: config.max_results]
    return SearchResult(rows=tuple(rows), algebras=tuple(algebras))


def count_cl_algebras(config: SearchConfig) -> tuple[CensusRow, ...]:
    return run_search(replace(config, count_only=True)).rows


def render_search_result(result: SearchResult) -> str:
    """Canonical text form of a census; identical across repeated runs."""
    from .fileformat import serialize_algebra

    lines = [
        f"size {r.size} lattice {r.lattice_index} count {r.count}"
        for r in result.rows
    ]
    lines.append(f"total {result.total}")
    for alg in result.algebras:
        lines.append("")
        lines.append(serialize_algebra(alg).rstrip("\n"))
    return "\n".join(lines) + "\n"
