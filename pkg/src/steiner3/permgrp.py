"""Permutation groups on {0..n-1}: orbits, exact orders, design actions.

Group order uses a deterministic Schreier-Sims construction: no
randomness, so stabilizer chains (and everything derived from them) are
reproducible run to run.  The automorphism search for a design is a
backtracking search over point images, pruned by the block structure,
returning one coset representative per stabilizer-chain level.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .design import Design


class PermutationError(ValueError):
    """Malformed permutation or mismatched degrees."""


class SetNotPreserved(ValueError):
    """A permutation mapped some block outside the block list."""

    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"image of block {witness} is not a block")
        self.witness = witness


class SearchBudgetExceeded(RuntimeError):
    """Automorphism search refused: degree above the supported bound."""


class Permutation:
    """A bijection on {0..n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise PermutationError(f"not a bijection on 0..{n - 1}: {images}")
            seen[x] = True
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition acting left to right: (p*q)(x) = q(p(x))."""
        if self.degree != other.degree:
            raise PermutationError("degree mismatch")
        o = other.images
        return Permutation(o[x] for x in self.images)

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each rotated to start at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append(tuple(cycle))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(identity on {self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body})"


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    gens: tuple[Permutation, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.degree != self.degree:
                raise PermutationError(
                    f"generator degree {g.degree} != {self.degree}"
                )

    @classmethod
    def build(cls, degree: int, gens: Iterable[Permutation | Sequence[int]]):
        out = tuple(
            g if isinstance(g, Permutation) else Permutation(g) for g in gens
        )
        return cls(degree, out)


@dataclass(frozen=True)
class GroupSummary:
    order: int
    base: tuple[int, ...]
    stabilizer_orders: tuple[int, ...]  # |G|, |G_b1|, |G_b1b2|, ..., 1


def orbit(gens: GeneratorSet, seed, act: Callable | None = None) -> list:
    """Canonically sorted closure of seed under the generators.

    `act(g, state) -> state` defaults to the point action g(state).
    """
    if act is None:
        act = lambda g, x: g.images[x]
    seen = {seed}
    queue = deque([seed])
    while queue:
        state = queue.popleft()
        for g in gens.gens:
            nxt = act(g, state)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen)


def _orbit_partition(gens: GeneratorSet, states: Sequence, act: Callable) -> list[list]:
    """Orbits of the given states in first-seen order."""
    remaining = set(states)
    parts = []
    for seed in states:
        if seed not in remaining:
            continue
        part = orbit(gens, seed, act)
        remaining.difference_update(part)
        parts.append(part)
    return parts


# -- Schreier-Sims --------------------------------------------------------


class _Level:
    __slots__ = ("beta", "gens", "transversal", "done")

    def __init__(self, beta: int, ident: tuple):
        self.beta = beta
        self.gens: list[tuple] = []
        self.transversal: dict[int, tuple[tuple, tuple]] = {beta: (ident, ident)}
        self.done: set[tuple[int, int]] = set()


def _compose(f: tuple, g: tuple) -> tuple:
    return tuple(g[x] for x in f)


def _invert(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def group_order(gens: GeneratorSet, base_prefix: Sequence[int] = ()) -> GroupSummary:
    """Exact order and stabilizer-chain orders via Schreier-Sims.

    New base points are chosen greedily as the smallest point moved at
    that level; `base_prefix` forces the first base points, which makes
    stabilizer orders along a chosen point sequence directly readable.
    """
    degree = gens.degree
    ident = tuple(range(degree))
    levels = [_Level(b, ident) for b in base_prefix]

    def sift(g: tuple, start: int) -> tuple[tuple, int]:
        for i in range(start, len(levels)):
            lvl = levels[i]
            d = g[lvl.beta]
            if d == lvl.beta:
                continue
            entry = lvl.transversal.get(d)
            if entry is None:
                return g, i
            g = _compose(g, entry[1])
        return g, len(levels)

    def place(residue: tuple, top: int, j: int) -> None:
        # append residue to every level it belongs to: top..j
        if j == len(levels):
            beta = min(x for x in range(degree) if residue[x] != x)
            levels.append(_Level(beta, ident))
        for m in range(top, j + 1):
            levels[m].gens.append(residue)

    def process(i: int) -> int | None:
        """Handle unprocessed (orbit point, generator) pairs at level i.

        Returns the deepest level that received a new generator, or None
        once level i is complete.
        """
        lvl = levels[i]
        frontier = list(lvl.transversal)
        while frontier:
            new_points = []
            for p in frontier:
                up = lvl.transversal[p][0]
                for gi in range(len(lvl.gens)):
                    if (p, gi) in lvl.done:
                        continue
                    lvl.done.add((p, gi))
                    s = lvl.gens[gi]
                    q = s[p]
                    entry = lvl.transversal.get(q)
                    if entry is None:
                        u = _compose(up, s)
                        lvl.transversal[q] = (u, _invert(u))
                        new_points.append(q)
                        continue
                    schreier = _compose(_compose(up, s), entry[1])
                    if schreier == ident:
                        continue
                    residue, j = sift(schreier, i + 1)
                    if residue == ident:
                        continue
                    place(residue, i + 1, j)
                    return j
            frontier = new_points
        return None

    for g in gens.gens:
        residue, j = sift(g.images, 0)
        if residue == ident:
            continue
        place(residue, 0, j)
        i = j
        while i >= 0:
            deeper = process(i)
            i = deeper if deeper is not None else i - 1

    order = 1
    chain = [1]
    for lvl in reversed(levels):
        order *= len(lvl.transversal)
        chain.append(order)
    chain.reverse()
    return GroupSummary(
        order=order,
        base=tuple(lvl.beta for lvl in levels),
        stabilizer_orders=tuple(chain),
    )


# -- actions on designs ----------------------------------------------------


def block_action(design: Design, g: Permutation) -> Permutation:
    """The permutation induced on block indices, if g preserves the blocks."""
    if g.degree != design.v:
        raise PermutationError(
            f"permutation degree {g.degree} != point count {design.v}"
        )
    images = []
    for block in design.blocks:
        target = design.block_index([g.images[x] for x in block])
        if target < 0:
            raise SetNotPreserved(block)
        images.append(target)
    return Permutation(images)


@dataclass(frozen=True)
class FlagReport:
    v: int
    b: int
    k: int
    preserves_blocks: bool
    flag_count: int
    flag_orbit_size: int
    block_orbit_count: int
    block_orbit_sizes: tuple[int, ...]
    point_orbit_count: int
    point_pair_orbit_count: int
    flag_transitive: bool
    block_transitive: bool
    point_transitive: bool
    point_2_transitive: bool


def is_flag_transitive(design: Design, gens: GeneratorSet) -> FlagReport:
    """Transitivity report for a group acting on a design.

    Flags are encoded as point*b + block_index.  Raises SetNotPreserved
    if some generator is not an automorphism.
    """
    if gens.degree != design.v:
        raise PermutationError(
            f"generator degree {gens.degree} != point count {design.v}"
        )
    v, b, k = design.v, design.b, design.k
    induced = [block_action(design, g) for g in gens.gens]
    pair = list(zip(gens.gens, induced))

    # flag encoding: point * b + block index
    seed = design.blocks[0][0] * b + 0
    seen = {seed}
    queue = deque([seed])
    while queue:
        state = queue.popleft()
        x, bi = divmod(state, b)
        for g, gb in pair:
            nxt = g.images[x] * b + gb.images[bi]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    flag_orbit_size = len(seen)
    flag_count = b * k

    block_gens = GeneratorSet(b, tuple(induced))
    block_orbits = _orbit_partition(
        block_gens, range(b), lambda g, x: g.images[x]
    )
    point_orbits = _orbit_partition(gens, range(v), lambda g, x: g.images[x])
    pairs = [x * v + y for x in range(v) for y in range(v) if x != y]
    pair_orbits = _orbit_partition(
        gens,
        pairs,
        lambda g, s: g.images[s // v] * v + g.images[s % v],
    )

    return FlagReport(
        v=v,
        b=b,
        k=k,
        preserves_blocks=True,
        flag_count=flag_count,
        flag_orbit_size=flag_orbit_size,
        block_orbit_count=len(block_orbits),
        block_orbit_sizes=tuple(len(p) for p in block_orbits),
        point_orbit_count=len(point_orbits),
        point_pair_orbit_count=len(pair_orbits),
        flag_transitive=flag_orbit_size == flag_count,
        block_transitive=len(block_orbits) == 1,
        point_transitive=len(point_orbits) == 1,
        point_2_transitive=len(pair_orbits) == 1,
    )


# -- automorphism search ----------------------------------------------------

AUT_SEARCH_MAX_POINTS = 64


class _AutSearch:
    """Backtracking over point images with block-consistency propagation.

    Once three assigned points of a block determine its image block, every
    further point of that block is confined to the image; the next point
    to branch on is always one lying in the most already-determined
    blocks, so refutations stay shallow.
    """

    def __init__(self, design: Design):
        self.v = design.v
        self.blocks = design.blocks
        self.nblocks = len(design.blocks)
        self.through: list[list[int]] = [[] for _ in range(self.v)]
        for bi, block in enumerate(design.blocks):
            for x in block:
                self.through[x].append(bi)
        self.triple: dict[tuple[int, int, int], int] = {}
        for bi, block in enumerate(design.blocks):
            for tri in combinations(block, 3):
                self.triple[tri] = bi
        self.members = [set(block) for block in design.blocks]

    def find(self, partial: dict[int, int]) -> tuple[int, ...] | None:
        """First automorphism extending the partial point map, or None."""
        v = self.v
        self.img = [-1] * v
        self.pre = [-1] * v
        self.blk_img = [-1] * self.nblocks
        self.blk_pre = [-1] * self.nblocks
        self.count = [0] * self.nblocks
        self.assigned = [[] for _ in range(self.nblocks)]
        for x, y in partial.items():
            if self._assign(x, y) is None:
                return None
        return tuple(self.img) if self._dfs() else None

    def _assign(self, x: int, y: int):
        if self.pre[y] != -1 or self.img[x] != -1:
            return None
        self.img[x] = y
        self.pre[y] = x
        touched = 0
        determined = []
        ok = True
        for bi in self.through[x]:
            self.count[bi] += 1
            self.assigned[bi].append(x)
            touched += 1
            ti = self.blk_img[bi]
            if ti != -1:
                if y not in self.members[ti]:
                    ok = False
                    break
                continue
            if self.count[bi] != 3:
                continue
            a, c = (p for p in self.assigned[bi] if p != x)
            key = tuple(sorted((self.img[a], self.img[c], y)))
            ti = self.triple.get(key)
            if ti is None or self.blk_pre[ti] != -1:
                ok = False
                break
            consistent = True
            for w in self.blocks[ti]:
                z = self.pre[w]
                if z != -1 and z not in self.members[bi]:
                    consistent = False
                    break
            if not consistent:
                ok = False
                break
            self.blk_img[bi] = ti
            self.blk_pre[ti] = bi
            determined.append(bi)
        if ok:
            return determined
        for bi in self.through[x][:touched]:
            self.count[bi] -= 1
            self.assigned[bi].pop()
        for bi in determined:
            self.blk_pre[self.blk_img[bi]] = -1
            self.blk_img[bi] = -1
        self.img[x] = -1
        self.pre[y] = -1
        return None

    def _unassign(self, x: int, y: int, determined: list[int]) -> None:
        for bi in self.through[x]:
            self.count[bi] -= 1
            self.assigned[bi].pop()
        for bi in determined:
            self.blk_pre[self.blk_img[bi]] = -1
            self.blk_img[bi] = -1
        self.img[x] = -1
        self.pre[y] = -1

    def _next_point(self) -> tuple[int, int]:
        best, best_score = -1, -1
        for x in range(self.v):
            if self.img[x] != -1:
                continue
            score = sum(1 for bi in self.through[x] if self.blk_img[bi] != -1)
            if score > best_score:
                best, best_score = x, score
        return best, best_score

    def _dfs(self) -> bool:
        x, score = self._next_point()
        if x == -1:
            return True
        if score > 0:
            for bi in self.through[x]:
                ti = self.blk_img[bi]
                if ti != -1:
                    candidates = [w for w in self.blocks[ti] if self.pre[w] == -1]
                    break
        else:
            candidates = [w for w in range(self.v) if self.pre[w] == -1]
        for y in candidates:
            undo = self._assign(x, y)
            if undo is None:
                continue
            if self._dfs():
                return True
            self._unassign(x, y, undo)
        return False


def automorphism_group(design: Design) -> GeneratorSet:
    """Generators of the full automorphism group of a design.

    Walks the stabilizer chain of the base 0, 1, 2, ...: at each level it
    finds one automorphism per candidate image of the base point (skipping
    images already reachable by automorphisms found so far), so the union
    of the discovered coset representatives generates the whole group.
    Output order is deterministic.
    """
    v = design.v
    if v > AUT_SEARCH_MAX_POINTS:
        raise SearchBudgetExceeded(
            f"automorphism search supports at most {AUT_SEARCH_MAX_POINTS} points, got {v}"
        )
    searcher = _AutSearch(design)
    gens: list[tuple[int, ...]] = []
    prefix: dict[int, int] = {}

    def close_orbit(points: set[int], perms: list[tuple[int, ...]]) -> set[int]:
        stack = list(points)
        while stack:
            p = stack.pop()
            for g in perms:
                q = g[p]
                if q not in points:
                    points.add(q)
                    stack.append(q)
        return points

    for base in range(v):
        fixing = [g for g in gens if all(g[p] == p for p in prefix)]
        done = close_orbit({base}, fixing)
        # an automorphism fixing 0..base-1 pointwise cannot send base below itself
        for y in range(base + 1, v):
            if y in done:
                continue
            trial = dict(prefix)
            trial[base] = y
            found = searcher.find(trial)
            if found is not None:
                gens.append(found)
                fixing.append(found)
            done = close_orbit(done | {y}, fixing)
        prefix[base] = base
    return GeneratorSet.build(v, gens)


# -- generator file format ---------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_generators(text: str) -> GeneratorSet:
    """Parse the text format: a 'degree: n' header, then one permutation
    per line, either 1-based cycles "(1 2 3)(5 6)" or an image list
    "img: 2,0,1".  '#' starts a comment."""
    degree = None
    perms: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree:\s*(\d+)", line)
            if not m:
                raise PermutationError(
                    f"line {lineno}: expected 'degree: n' header, got {line!r}"
                )
            degree = int(m.group(1))
            continue
        if line.startswith("img:"):
            images = [int(tok) for tok in line[4:].replace(",", " ").split()]
            if len(images) != degree:
                raise PermutationError(
                    f"line {lineno}: image list has {len(images)} entries, degree is {degree}"
                )
            perms.append(Permutation(images))
            continue
        if line.startswith("("):
            consumed = _CYCLE_RE.sub("", line).strip()
            if consumed:
                raise PermutationError(f"line {lineno}: trailing junk {consumed!r}")
            cycles = []
            for body in _CYCLE_RE.findall(line):
                pts = [int(tok) - 1 for tok in body.replace(",", " ").split()]
                if any(p < 0 or p >= degree for p in pts):
                    raise PermutationError(
                        f"line {lineno}: cycle entry out of range 1..{degree}"
                    )
                cycles.append(pts)
            perms.append(Permutation.from_cycles(cycles, degree))
            continue
        raise PermutationError(f"line {lineno}: unrecognized permutation {line!r}")
    if degree is None:
        raise PermutationError("missing 'degree: n' header")
    return GeneratorSet(degree, tuple(perms))


def format_generators(gens: GeneratorSet, comment: str | None = None) -> str:
    """Emit the canonical form of the generator file format: image lists."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"degree: {gens.degree}")
    for g in gens.gens:
        lines.append("img: " + ",".join(map(str, g.images)))
    return "\n".join(lines) + "\n"
