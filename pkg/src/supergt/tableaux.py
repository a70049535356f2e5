"""Shapes, hook diagrams, admissible Gelfand-Tsetlin tableaux and the SSYT bijection.

Conventions.  A shape carries (m, n, r); we write m' = r + m and k' = r + k.
A GT tableau has rows indexed k = r, ..., m'+n (row k has k entries); row
m'+n is the defining weight lambda and row r is mu.  Rows are stored bottom
to top, so ``rows[j]`` is row r + j.

Admissibility conditions are labelled A(1)..A(6):

  A(1) boundary rows equal lambda and mu;
  A(2) theta steps in {0,1} across rows above the wall, columns <= m';
  A(3) each row above the wall is a covariant weight: its m'-th entry bounds
       the number of positive entries in columns m'+1..k  (see note below);
  A(4) if entry (m'+1, m') is 0 the step below it must be 0;
  A(5) rows above the wall weakly decrease along columns 1..m';
  A(6) classical interleaving inside the pure even and pure odd zones.

Note on A(3): the source text counts positive entries starting at column m'
itself.  That literal reading rejects tableaux that the basis theorem and the
SSYT bijection require (already for the gl(1|1) weight (1,1)), so the
covariance reading (count from column m'+1) is used; the literal variant is
kept for the documenting regression test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


class ShapeError(ValueError):
    pass


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    condition: str  # "A(1)" .. "A(6)"
    row: int
    column: int
    message: str

    def __str__(self):
        return f"{self.condition} violated at row {self.row}, column {self.column}: {self.message}"


def check_covariant(weight: Sequence[int], m: int, n: int) -> str | None:
    """None if weight is a covariant gl(m|n) weight, else the violated condition."""
    w = tuple(weight)
    if len(w) != m + n:
        return f"weight length {len(w)} != m+n = {m + n}"
    if any(not isinstance(x, int) or x < 0 for x in w):
        return "entries must be nonnegative integers"
    if any(w[i] < w[i + 1] for i in range(m - 1)):
        return "first m entries must weakly decrease"
    if any(w[m + i] < w[m + i + 1] for i in range(n - 1)):
        return "last n entries must weakly decrease"
    if m > 0:
        l = sum(1 for x in w[m:] if x > 0)
        if l > w[m - 1]:
            return f"number of nonzero odd entries ({l}) exceeds entry m ({w[m - 1]})"
    return None


@dataclass(frozen=True)
class HookDiagram:
    """A partition, used as an (m|n)-hook Young diagram."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rs = tuple(x for x in self.rows)
        if any(not isinstance(x, int) or x < 0 for x in rs):
            raise ShapeError("partition entries must be nonnegative integers")
        if any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
            raise ShapeError("partition rows must weakly decrease")
        object.__setattr__(self, "rows", tuple(x for x in rs if x > 0))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def conjugate(self) -> "HookDiagram":
        if not self.rows:
            return HookDiagram(())
        return HookDiagram(
            tuple(sum(1 for r in self.rows if r >= j) for j in range(1, self.rows[0] + 1))
        )

    def contains(self, other: "HookDiagram") -> bool:
        return all(other.row(i) <= self.row(i) for i in range(1, len(other.rows) + 1))

    def fits_hook(self, m: int, n: int) -> bool:
        """At most n boxes per row below row m."""
        return all(r <= n for r in self.rows[m:])

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield (i, j)


def hook_diagram(weight: Sequence[int], m: int, n: int) -> HookDiagram:
    """Hook Young diagram of a covariant gl(m|n) weight.

    Rows 1..m are the even entries; columns 1..l extend to depth (odd entry)+m,
    where l counts the nonzero odd entries.
    """
    bad = check_covariant(weight, m, n)
    if bad is not None:
        raise ShapeError(f"not a covariant gl({m}|{n}) weight: {bad}")
    w = tuple(weight)
    even = list(w[:m])
    odd = [x for x in w[m:] if x > 0]
    # rows below the even block: conjugate of the odd part
    extra_rows = []
    depth = 1
    while True:
        cnt = sum(1 for x in odd if x >= depth)
        if cnt == 0:
            break
        extra_rows.append(cnt)
        depth += 1
    return HookDiagram(tuple(even) + tuple(extra_rows))


def weight_from_hook(diagram: HookDiagram, m: int, n: int) -> tuple[int, ...]:
    """Inverse of hook_diagram; raises if the diagram does not fit the (m|n)-hook."""
    if not diagram.fits_hook(m, n):
        raise ShapeError(f"diagram {diagram.rows} does not fit the ({m}|{n})-hook")
    even = tuple(diagram.row(i) for i in range(1, m + 1))
    conj = diagram.conjugate()
    odd = tuple(max(conj.row(j) - m, 0) for j in range(1, n + 1))
    w = even + odd
    bad = check_covariant(w, m, n)
    if bad is not None:
        raise ShapeError(f"diagram {diagram.rows} has no covariant gl({m}|{n}) weight: {bad}")
    return w


@dataclass(frozen=True)
class SkewShape:
    """The representation-defining datum (m, n, r, lambda, mu).

    lambda is a covariant gl(m'|n) weight with m' = r + m; mu is a covariant
    gl(r) weight whose hook diagram is contained in lambda's.
    """

    m: int
    n: int
    r: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "mu", tuple(self.mu))
        if self.m < 0 or self.n < 0 or self.r < 0 or self.m + self.n < 1:
            raise ShapeError("need m, n, r >= 0 and m + n >= 1")
        bad = check_covariant(self.lam, self.m_prime, self.n)
        if bad is not None:
            raise ShapeError(f"lambda: {bad}")
        bad = check_covariant(self.mu, self.r, 0)
        if bad is not None:
            raise ShapeError(f"mu: {bad}")
        if not self.outer_diagram().contains(self.inner_diagram()):
            raise ShapeError("hook diagram of mu is not contained in that of lambda")

    @property
    def m_prime(self) -> int:
        return self.r + self.m

    @property
    def top_row_index(self) -> int:
        return self.m_prime + self.n

    def outer_diagram(self) -> HookDiagram:
        return hook_diagram(self.lam, self.m_prime, self.n)

    def inner_diagram(self) -> HookDiagram:
        return hook_diagram(self.mu, self.r, 0)

    def s(self, k: int) -> int:
        """Parity sign of index k in gl(m|n): +1 for k <= m, -1 above."""
        if not 1 <= k <= self.m + self.n:
            raise IndexError(f"index {k} outside 1..{self.m + self.n}")
        return 1 if k <= self.m else -1

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "lambda": list(self.lam),
            "mu": list(self.mu),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "SkewShape":
        return SkewShape(d["m"], d["n"], d["r"], tuple(d["lambda"]), tuple(d["mu"]))


@dataclass(frozen=True)
class GTTableau:
    """Triangular array with rows r..m'+n; rows[j] is row r+j (length r+j)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        sh = self.shape
        expected = sh.top_row_index - sh.r + 1
        if len(rows) != expected:
            raise TableauError(f"need {expected} rows, got {len(rows)}")
        for j, row in enumerate(rows):
            if len(row) != sh.r + j:
                raise TableauError(f"row {sh.r + j} must have {sh.r + j} entries")
            if any(not isinstance(x, int) for x in row):
                raise TableauError("entries must be integers")

    def entry(self, k: int, i: int) -> int:
        """Entry at absolute row k (r <= k <= m'+n), column i (1-based)."""
        return self.rows[k - self.shape.r][i - 1]

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k - self.shape.r]

    def theta(self, k: int, i: int) -> int:
        """Step entry(k+1, i) - entry(k, i)."""
        return self.entry(k + 1, i) - self.entry(k, i)

    def sort_key(self) -> tuple[int, ...]:
        """Reading word top-to-bottom, left-to-right (canonical order key)."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def bump(self, k: int, i: int, delta: int) -> "GTTableau":
        """Replace entry (k', i) by entry + delta, k' = r + k (the shift move)."""
        kp = self.shape.r + k
        rows = list(self.rows)
        row = list(rows[kp - self.shape.r])
        row[i - 1] += delta
        rows[kp - self.shape.r] = tuple(row)
        return GTTableau(self.shape, tuple(rows))

    def to_json_dict(self) -> dict:
        return {"shape": self.shape.to_json_dict(), "rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_json_dict(d: dict) -> "GTTableau":
        return GTTableau(SkewShape.from_json_dict(d["shape"]), tuple(tuple(r) for r in d["rows"]))


def check_admissible(t: GTTableau, a3_literal: bool = False) -> Violation | None:
    """First violated admissibility condition, or None.

    ``a3_literal`` switches A(3) to the literal count starting at column m'
    (kept only so tests can document that this reading undercounts).
    """
    sh = t.shape
    mp, top, r = sh.m_prime, sh.top_row_index, sh.r
    if t.row(top) != sh.lam:
        return Violation("A(1)", top, 0, f"top row {t.row(top)} != lambda {sh.lam}")
    if r > 0 and t.row(r) != sh.mu:
        return Violation("A(1)", r, 0, f"bottom row {t.row(r)} != mu {sh.mu}")
    for k in range(mp + 1, top + 1):
        for i in range(1, mp + 1):
            th = t.entry(k, i) - t.entry(k - 1, i)
            if th not in (0, 1):
                return Violation("A(2)", k, i, f"step {th} not in {{0,1}}")
    if mp >= 1:
        for k in range(mp + 1, top + 1):
            start = mp if a3_literal else mp + 1
            count = sum(1 for i in range(start, k + 1) if t.entry(k, i) > 0)
            if t.entry(k, mp) < count:
                return Violation(
                    "A(3)", k, mp, f"entry {t.entry(k, mp)} < positive count {count}"
                )
        if sh.n >= 1 and t.entry(mp + 1, mp) == 0 and t.entry(mp, mp) != 0:
            return Violation("A(4)", mp, mp, "step below a zero wall entry must be 0")
    for k in range(mp + 1, top + 1):
        for i in range(1, mp):
            if t.entry(k, i) < t.entry(k, i + 1):
                return Violation("A(5)", k, i, "row not weakly decreasing in even columns")
    for k in range(r, mp):
        for i in range(1, k + 1):
            if t.entry(k + 1, i) < t.entry(k, i):
                return Violation("A(6)", k, i, "upper-left interleaving fails (even zone)")
            if t.entry(k, i) < t.entry(k + 1, i + 1):
                return Violation("A(6)", k, i, "lower-right interleaving fails (even zone)")
    for k in range(mp + 1, top):
        for i in range(mp + 1, k + 1):
            if t.entry(k + 1, i) < t.entry(k, i):
                return Violation("A(6)", k, i, "upper-left interleaving fails (odd zone)")
            if t.entry(k, i) < t.entry(k + 1, i + 1):
                return Violation("A(6)", k, i, "lower-right interleaving fails (odd zone)")
    return None


def is_admissible(t: GTTableau) -> bool:
    return check_admissible(t) is None


def enumerate_tableaux(shape: SkewShape) -> list[GTTableau]:
    """All admissible tableaux of the shape, in canonical descending order.

    Backtracks row by row from the top, with per-entry bounds from A(2), A(5),
    A(6); full conditions are re-checked on each completed candidate, so the
    pruning cannot over-accept.
    """
    sh = shape
    mp, top, r = sh.m_prime, sh.top_row_index, sh.r
    results: list[GTTableau] = []

    def candidates_for_row(k: int, above: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        # bounds per column; row k has k entries
        options: list[range] = []
        for i in range(1, k + 1):
            if k >= mp and i <= mp:
                lo, hi = above[i - 1] - 1, above[i - 1]  # A(2)
            else:
                lo, hi = above[i], above[i - 1]  # A(6) interleave (0-based above)
            options.append(range(hi, lo - 1, -1))

        def build(i: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
            if i == k:
                yield tuple(prefix)
                return
            for v in options[i]:
                if k >= mp + 1 and 1 <= i < mp and prefix and prefix[-1] < v:
                    continue  # A(5) prune: even columns weakly decreasing
                prefix.append(v)
                yield from build(i + 1, prefix)
                prefix.pop()

        yield from build(0, [])

    def descend(k: int, built: list[tuple[int, ...]]):
        if k < r:
            rows = tuple(reversed(built))
            t = GTTableau(sh, rows)
            if check_admissible(t) is None:
                results.append(t)
            return
        if k == r:
            descend(k - 1, built + [sh.mu])
            return
        for row in candidates_for_row(k, built[-1]):
            descend(k - 1, built + [row])

    descend(top - 1, [sh.lam])
    results.sort(key=GTTableau.sort_key, reverse=True)
    return results


def _enumerate_brute(shape: SkewShape, slack: int = 1) -> list[GTTableau]:
    """Independent range-filter enumeration (test oracle; exponential)."""
    sh = shape
    top, r = sh.top_row_index, sh.r
    hi = max(list(sh.lam) + list(sh.mu) + [0])
    lo = -slack
    free_rows = list(range(r + 1, top))
    pools = [list(itertools.product(range(lo, hi + 1), repeat=k)) for k in free_rows]
    results = []
    for combo in itertools.product(*pools):
        t = GTTableau(sh, (sh.mu,) + combo + (sh.lam,))
        if check_admissible(t) is None:
            results.append(t)
    results.sort(key=GTTableau.sort_key, reverse=True)
    return results


def content_values(t: GTTableau) -> dict[tuple[int, int], int]:
    """The table l(k, i) for 0 <= k <= m+n, 1 <= i <= k' = r+k.

    l(k,i) = entry(k', i) + r - i + 1 for even columns i <= m' and
    l(k,i) = -entry(k', i) + r + i - 2m' for odd columns i > m'.
    """
    sh = t.shape
    mp, r = sh.m_prime, sh.r
    out: dict[tuple[int, int], int] = {}
    for k in range(0, sh.m + sh.n + 1):
        kp = r + k
        for i in range(1, kp + 1):
            if i <= mp:
                out[(k, i)] = t.entry(kp, i) + r - i + 1
            else:
                out[(k, i)] = -t.entry(kp, i) + r + i - 2 * mp
    return out


@dataclass(frozen=True)
class ContentTable:
    l_values: dict  # (k, i) -> int

    def l(self, k: int, i: int) -> int:
        return self.l_values[(k, i)]


def content_table(t: GTTableau) -> ContentTable:
    return ContentTable(content_values(t))


# ---------------------------------------------------------------------------
# Semistandard Young tableaux of the skew hook shape and the bijection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SSYT:
    """Filling of the skew diagram outer/inner with entries in 1..m+n.

    ``filling[i]`` lists the values in row i+1, columns inner_i+1..outer_i.
    """

    m: int
    n: int
    outer: HookDiagram
    inner: HookDiagram
    filling: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "filling", tuple(tuple(row) for row in self.filling))
        if not self.outer.contains(self.inner):
            raise ShapeError("inner diagram not contained in outer")
        nrows = len(self.outer.rows)
        if len(self.filling) != nrows:
            raise TableauError(f"filling must have {nrows} rows")
        for i in range(1, nrows + 1):
            if len(self.filling[i - 1]) != self.outer.row(i) - self.inner.row(i):
                raise TableauError(f"row {i} has wrong number of boxes")
        bad = self._check_semistandard()
        if bad:
            raise TableauError(bad)

    def value(self, i: int, j: int) -> int:
        return self.filling[i - 1][j - self.inner.row(i) - 1]

    def _check_semistandard(self) -> str | None:
        m = self.m
        for i in range(1, len(self.outer.rows) + 1):
            for j in range(self.inner.row(i) + 1, self.outer.row(i) + 1):
                v = self.value(i, j)
                if not 1 <= v <= self.m + self.n:
                    return f"entry {v} at ({i},{j}) outside alphabet"
                if j > self.inner.row(i) + 1:
                    left = self.value(i, j - 1)
                    if left > v or (left == v and v > m):
                        return f"row condition fails at ({i},{j})"
                if i > 1 and self.inner.row(i - 1) < j <= self.outer.row(i - 1):
                    up = self.value(i - 1, j)
                    if up > v or (up == v and v <= m):
                        return f"column condition fails at ({i},{j})"
        return None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "outer": list(self.outer.rows),
            "inner": list(self.inner.rows),
            "filling": [list(r) for r in self.filling],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "SSYT":
        return SSYT(
            d["m"],
            d["n"],
            HookDiagram(tuple(d["outer"])),
            HookDiagram(tuple(d["inner"])),
            tuple(tuple(r) for r in d["filling"]),
        )


def enumerate_ssyt(m: int, n: int, outer: HookDiagram, inner: HookDiagram) -> list[SSYT]:
    """Direct box-by-box enumeration of semistandard fillings.

    Independent of the GT admissibility logic; used as the counting oracle.
    """
    if not outer.contains(inner):
        raise ShapeError("inner diagram not contained in outer")
    boxes: list[tuple[int, int]] = []
    for i in range(1, len(outer.rows) + 1):
        for j in range(inner.row(i) + 1, outer.row(i) + 1):
            boxes.append((i, j))
    values: dict[tuple[int, int], int] = {}
    results: list[SSYT] = []

    def ok(i: int, j: int, v: int) -> bool:
        left = values.get((i, j - 1))
        if left is not None and (left > v or (left == v and v > m)):
            return False
        up = values.get((i - 1, j))
        if up is not None and (up > v or (up == v and v <= m)):
            return False
        # skew rows/columns are contiguous, so only adjacent boxes constrain
        return True

    def fill(idx: int):
        if idx == len(boxes):
            rows = []
            for i in range(1, len(outer.rows) + 1):
                rows.append(
                    tuple(values[(i, j)] for j in range(inner.row(i) + 1, outer.row(i) + 1))
                )
            results.append(SSYT(m, n, outer, inner, tuple(rows)))
            return
        i, j = boxes[idx]
        for v in range(1, m + n + 1):
            if ok(i, j, v):
                values[(i, j)] = v
                fill(idx + 1)
                del values[(i, j)]

    fill(0)
    return results


def tableau_to_ssyt(t: GTTableau) -> SSYT:
    """Insert k into the diagram increment of step k of the hook-diagram chain."""
    if not is_admissible(t):
        raise TableauError("tableau is not admissible")
    sh = t.shape
    chain = [_row_diagram(t, k) for k in range(0, sh.m + sh.n + 1)]
    for k in range(1, len(chain)):
        if not chain[k].contains(chain[k - 1]):
            raise TableauError(f"hook diagram chain not increasing at step {k}")
    outer, inner = chain[-1], chain[0]
    rows = []
    for i in range(1, len(outer.rows) + 1):
        row = []
        for j in range(inner.row(i) + 1, outer.row(i) + 1):
            k = next(s for s in range(1, len(chain)) if chain[s].row(i) >= j)
            row.append(k)
        rows.append(tuple(row))
    return SSYT(sh.m, sh.n, outer, inner, tuple(rows))


def _row_diagram(t: GTTableau, k: int) -> HookDiagram:
    """Hook diagram of row r+k, read as a covariant weight of the k-th subalgebra."""
    sh = t.shape
    kp = sh.r + k
    w = t.row(kp)
    if k <= sh.m:
        return hook_diagram(w, kp, 0)
    return hook_diagram(w, sh.m_prime, k - sh.m)


def ssyt_to_tableau(s: SSYT, shape: SkewShape) -> GTTableau:
    """Inverse bijection: strip entries > k and read off covariant weights."""
    sh = shape
    if (s.m, s.n) != (sh.m, sh.n):
        raise TableauError("SSYT alphabet does not match the shape")
    if s.outer != sh.outer_diagram() or s.inner != sh.inner_diagram():
        raise TableauError("SSYT shape does not match the skew shape")
    rows: list[tuple[int, ...]] = [sh.mu]
    for k in range(1, sh.m + sh.n + 1):
        kp = sh.r + k
        sub = []
        for i in range(1, len(s.outer.rows) + 1):
            length = s.inner.row(i)
            for j in range(s.inner.row(i) + 1, s.outer.row(i) + 1):
                if s.value(i, j) <= k:
                    length += 1
                else:
                    break
            sub.append(length)
        diagram = HookDiagram(tuple(sub))
        if k <= sh.m:
            w = weight_from_hook(diagram, kp, 0)
        else:
            w = weight_from_hook(diagram, sh.m_prime, k - sh.m)
        rows.append(w)
    t = GTTableau(sh, tuple(rows))
    bad = check_admissible(t)
    if bad is not None:
        raise TableauError(f"filling does not produce an admissible tableau: {bad}")
    return t


# ---------------------------------------------------------------------------
# Admissible transformations
# ---------------------------------------------------------------------------


def admissible_moves(t: GTTableau) -> Iterator[tuple[int, int, int, GTTableau]]:
    """All (k, i, sign, target) with both t and target admissible."""
    sh = t.shape
    for k in range(1, sh.m + sh.n):
        kp = sh.r + k
        for i in range(1, kp + 1):
            for sign in (1, -1):
                cand = t.bump(k, i, sign)
                if check_admissible(cand) is None:
                    yield (k, i, sign, cand)


@dataclass(frozen=True)
class TransformationGraph:
    vertices: tuple[GTTableau, ...]
    edges: tuple[tuple[int, int, int, int, int], ...]  # (src, dst, k, i, sign)
    connected: bool

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.vertices))}
        for src, dst, *_ in self.edges:
            adj[src].add(dst)
            adj[dst].add(src)
        return adj

    def spanning_tree(self) -> list[tuple[int, int, int, int, int]]:
        """BFS tree over edges; empty if the graph is disconnected or trivial."""
        if not self.vertices:
            return []
        seen = {0}
        tree = []
        frontier = [0]
        by_src: dict[int, list] = {}
        for e in self.edges:
            by_src.setdefault(e[0], []).append(e)
        while frontier:
            v = frontier.pop()
            for e in by_src.get(v, []):
                if e[1] not in seen:
                    seen.add(e[1])
                    tree.append(e)
                    frontier.append(e[1])
        return tree if len(seen) == len(self.vertices) else []


def transformation_graph(
    shape: SkewShape, vertices: list[GTTableau] | None = None
) -> TransformationGraph:
    verts = enumerate_tableaux(shape) if vertices is None else vertices
    index = {t: i for i, t in enumerate(verts)}
    edges = []
    for t in verts:
        for k, i, sign, target in admissible_moves(t):
            edges.append((index[t], index[target], k, i, sign))
    # BFS connectivity over undirected closure
    connected = True
    if verts:
        adj: dict[int, set[int]] = {i: set() for i in range(len(verts))}
        for src, dst, *_ in edges:
            adj[src].add(dst)
            adj[dst].add(src)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        connected = len(seen) == len(verts)
    return TransformationGraph(tuple(verts), tuple(edges), connected)


# ---------------------------------------------------------------------------
# Sweep helpers
# ---------------------------------------------------------------------------


def covariant_weights(m: int, n: int, max_total: int) -> Iterator[tuple[int, ...]]:
    """All covariant gl(m|n) weights with entry sum <= max_total."""

    def decreasing(parts: int, bound: int, total: int) -> Iterator[tuple[int, ...]]:
        if parts == 0:
            yield ()
            return
        for v in range(min(bound, total), -1, -1):
            for rest in decreasing(parts - 1, v, total - v):
                yield (v,) + rest

    for even in decreasing(m, max_total, max_total):
        rem = max_total - sum(even)
        for odd in decreasing(n, rem, rem):
            w = even + odd
            if check_covariant(w, m, n) is None:
                yield w


def skew_shapes(m: int, n: int, r: int, max_weight: int) -> Iterator[SkewShape]:
    """All valid shapes with the given (m, n, r) and |lambda| <= max_weight."""
    for lam in covariant_weights(r + m, n, max_weight):
        outer = hook_diagram(lam, r + m, n)
        for mu in covariant_weights(r, 0, max_weight):
            if outer.contains(hook_diagram(mu, r, 0)):
                yield SkewShape(m, n, r, lam, mu)
