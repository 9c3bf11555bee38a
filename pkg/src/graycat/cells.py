"""Cells of dimension 0-2: 1-cell words, whiskered atoms, arrows, proarrows.

Composite 1-cells are words of generators (identities are empty words), so
1-cell composition is strictly associative and unital by construction.
Vertical/horizontal 2-cells are kept in whiskered-atom normal form: an
ordered list of atoms `(left word, core generator, right word)`.  The core
of an atom is either a declared generator or a structural cell; structural
cores may carry composite-word indices, which `normalize` expands into
generator-indexed atoms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EndpointMismatch, IllTyped, StructureUnavailable, UnknownReference
from .signature import BASE, PathSpec


@dataclass(frozen=True)
class Path:
    src: str
    tgt: str
    word: tuple[str, ...]

    def __len__(self):
        return len(self.word)

    @property
    def is_identity(self):
        return not self.word

    @property
    def is_endo(self):
        return self.src == self.tgt


def path(sig, word, at=None):
    """Build a Path from generator names, checking composability."""
    word = tuple(word)
    if not word:
        a = at if at is not None else BASE
        sig.obj(a)
        return Path(a, a, ())
    src = None
    cur = None
    for name in word:
        g = sig.gen1(name)
        if cur is None:
            src = g.src
        elif g.src != cur:
            raise EndpointMismatch(f"{name!r} does not compose at {cur!r}")
        cur = g.tgt
    return Path(src, cur, word)


def resolve_pathspec(sig, spec):
    if isinstance(spec, Path):
        return spec
    if isinstance(spec, PathSpec):
        return path(sig, spec.word, spec.at)
    return path(sig, tuple(spec))


def concat_path(p, q):
    if p.tgt != q.src:
        raise EndpointMismatch(f"paths do not compose: {p.tgt!r} != {q.src!r}")
    return Path(p.src, q.tgt, p.word + q.word)


def concat_paths(*ps):
    out = ps[0]
    for q in ps[1:]:
        out = concat_path(out, q)
    return out


# ---------------------------------------------------------------------------
# atom cores
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VGen:
    """Declared vertical 2-cell generator."""

    name: str


@dataclass(frozen=True)
class BraidA:
    """Braiding object-component arrow sigma<u, w> : u.w -> w.u."""

    u: tuple[str, ...]
    w: tuple[str, ...]


@dataclass(frozen=True)
class DupA:
    """Duplicator arrow delta(w) : w -> w.w (primed = copies in swapped order)."""

    w: tuple[str, ...]
    primed: bool = False


@dataclass(frozen=True)
class DelA:
    """Deletor arrow eps(w) : w -> empty."""

    w: tuple[str, ...]


@dataclass(frozen=True)
class AdjEta:
    """Oplax adjunction unit eta : id -> f.g for a declared pair (f, g)."""

    f: str
    g: str


@dataclass(frozen=True)
class AdjEps:
    """Oplax adjunction counit eps : g.f -> id for a declared pair (f, g)."""

    f: str
    g: str


VCORE_TYPES = (VGen, BraidA, DupA, DelA, AdjEta, AdjEps)


@dataclass(frozen=True)
class HGen:
    """Declared horizontal 2-cell generator."""

    name: str


@dataclass(frozen=True)
class CompanionH:
    """Companion proarrow of an arrow core."""

    of: object  # a VCore


@dataclass(frozen=True)
class ConjointH:
    """Conjoint proarrow of an arrow core."""

    of: object


HCORE_TYPES = (HGen, CompanionH, ConjointH)


def _endo_path(sig, word, what):
    p = path(sig, word)
    if not p.is_endo:
        raise IllTyped(f"{what} needs an endo 1-cell word, got {p.src!r} -> {p.tgt!r}")
    return p


def vcore_bounds(sig, core):
    """Source and target Path of a bare arrow core."""
    if isinstance(core, VGen):
        g = sig.genV(core.name)
        return resolve_pathspec(sig, g.src), resolve_pathspec(sig, g.tgt)
    if isinstance(core, BraidA):
        if not sig.flags.braided:
            raise StructureUnavailable("braiding needs the braided flag")
        pu = _endo_path(sig, core.u, "braiding")
        pw = _endo_path(sig, core.w, "braiding")
        if pu.src != pw.src:
            raise IllTyped("braiding factors must share a 0-cell")
        return concat_path(pu, pw), concat_path(pw, pu)
    if isinstance(core, DupA):
        if not sig.flags.duplication:
            raise StructureUnavailable("duplicators need the duplication flag")
        p = _endo_path(sig, core.w, "duplicator")
        return p, concat_path(p, p)
    if isinstance(core, DelA):
        if not sig.flags.deletion:
            raise StructureUnavailable("deletors need the deletion flag")
        p = _endo_path(sig, core.w, "deletor")
        return p, Path(p.src, p.src, ())
    if isinstance(core, (AdjEta, AdjEps)):
        if (core.f, core.g) not in sig.flags.oplax_adjunctions:
            raise StructureUnavailable(f"({core.f}, {core.g}) is not a declared oplax adjunction")
        f = sig.gen1(core.f)
        g = sig.gen1(core.g)
        if f.tgt != g.src or g.tgt != f.src:
            raise IllTyped(f"adjunction pair ({core.f}, {core.g}) endpoints do not match")
        if isinstance(core, AdjEta):
            return Path(f.src, f.src, ()), Path(f.src, f.src, (core.f, core.g))
        return Path(g.src, g.src, (core.g, core.f)), Path(g.src, g.src, ())
    raise IllTyped(f"unknown arrow core {core!r}")


def hcore_bounds(sig, core):
    """Source and target Path of a bare proarrow core."""
    if isinstance(core, HGen):
        g = sig.genH(core.name)
        return resolve_pathspec(sig, g.src), resolve_pathspec(sig, g.tgt)
    if isinstance(core, (CompanionH, ConjointH)):
        _require_connectable(sig, core.of)
        s, t = vcore_bounds(sig, core.of)
        if isinstance(core, CompanionH):
            return s, t
        return t, s
    raise IllTyped(f"unknown proarrow core {core!r}")


def _require_connectable(sig, vcore):
    """Companions/conjoints exist for flagged arrow generators and, under the
    cartesian flags, for the duplicator and deletor arrows."""
    if isinstance(vcore, VGen):
        if vcore.name in sig.flags.companionable or vcore.name in sig.flags.conjoinable:
            return
        raise StructureUnavailable(f"arrow generator {vcore.name!r} is not companionable/conjoinable")
    if isinstance(vcore, DupA):
        if sig.flags.duplication and sig.flags.deletion:
            return
        raise StructureUnavailable("duplicator companions need duplication and deletion flags")
    if isinstance(vcore, DelA):
        if sig.flags.deletion:
            return
        raise StructureUnavailable("deletor companions need the deletion flag")
    raise StructureUnavailable(f"no companion structure for core {vcore!r}")


# ---------------------------------------------------------------------------
# whiskered atoms and 2-cells
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VAtom:
    left: Path
    core: object
    right: Path


@dataclass(frozen=True)
class HAtom:
    left: Path
    core: object
    right: Path


def atom_bounds(sig, atom):
    getter = vcore_bounds if isinstance(atom, VAtom) else hcore_bounds
    s, t = getter(sig, atom.core)
    if atom.left.tgt != s.src:
        raise EndpointMismatch(f"whisker context {atom.left} does not reach core source {s.src!r}")
    if s.tgt != atom.right.src:
        raise EndpointMismatch(f"core target {s.tgt!r} does not reach context {atom.right}")
    return (
        concat_paths(atom.left, s, atom.right),
        concat_paths(atom.left, t, atom.right),
    )


@dataclass(frozen=True)
class Arrow:
    src: Path
    tgt: Path
    atoms: tuple[VAtom, ...]

    @property
    def is_identity(self):
        return not self.atoms


@dataclass(frozen=True)
class Proarrow:
    src: Path
    tgt: Path
    atoms: tuple[HAtom, ...]

    @property
    def is_identity(self):
        return not self.atoms


def arrow_id(p):
    return Arrow(p, p, ())


def pro_id(p):
    return Proarrow(p, p, ())


def mk_arrow(sig, atoms, src=None):
    """Chain-check a list of VAtoms into an Arrow."""
    return _mk_cell2(sig, Arrow, atoms, src)


def mk_pro(sig, atoms, src=None):
    return _mk_cell2(sig, Proarrow, atoms, src)


def _mk_cell2(sig, cls, atoms, src):
    atoms = tuple(atoms)
    if not atoms:
        if src is None:
            raise IllTyped("identity 2-cell needs an explicit boundary path")
        return cls(src, src, ())
    cur_src, cur = atom_bounds(sig, atoms[0])
    if src is not None and src != cur_src:
        raise EndpointMismatch(f"stated source {src} does not match atom chain {cur_src}")
    for a in atoms[1:]:
        s, t = atom_bounds(sig, a)
        if s != cur:
            raise EndpointMismatch(f"atoms do not chain: {cur} vs {s}")
        cur = t
    return cls(cur_src, cur, atoms)


def atom_arrow(sig, core, left=None, right=None):
    """Single-atom arrow (left/right default to trivial contexts)."""
    s, t = vcore_bounds(sig, core)
    l = left if left is not None else Path(s.src, s.src, ())
    r = right if right is not None else Path(s.tgt, s.tgt, ())
    return mk_arrow(sig, [VAtom(l, core, r)])


def atom_pro(sig, core, left=None, right=None):
    s, t = hcore_bounds(sig, core)
    l = left if left is not None else Path(s.src, s.src, ())
    r = right if right is not None else Path(s.tgt, s.tgt, ())
    return mk_pro(sig, [HAtom(l, core, r)])


def whisker_arrow(sig, l, a, r):
    """Two-sided whiskering; identity contexts are neutral."""
    return _whisker2(sig, Arrow, VAtom, l, a, r)


def whisker_pro(sig, l, m, r):
    return _whisker2(sig, Proarrow, HAtom, l, m, r)


def _whisker2(sig, cls, atomcls, l, x, r):
    if l.tgt != x.src.src:
        raise EndpointMismatch(f"left context {l} does not reach {x.src.src!r}")
    if x.src.tgt != r.src:
        raise EndpointMismatch(f"right context {r} does not start at {x.src.tgt!r}")
    atoms = tuple(
        atomcls(concat_path(l, a.left), a.core, concat_path(a.right, r)) for a in x.atoms
    )
    return cls(concat_paths(l, x.src, r), concat_paths(l, x.tgt, r), atoms)


def compose_arrows(a, b):
    """Strict local composition: atom-list concatenation."""
    if a.tgt != b.src:
        raise EndpointMismatch(f"arrows do not compose: {a.tgt} != {b.src}")
    return Arrow(a.src, b.tgt, a.atoms + b.atoms)


def compose_pros(m, n):
    if m.tgt != n.src:
        raise EndpointMismatch(f"proarrows do not compose: {m.tgt} != {n.src}")
    return Proarrow(m.src, n.tgt, m.atoms + n.atoms)


def acomp(*arrows):
    out = arrows[0]
    for a in arrows[1:]:
        out = compose_arrows(out, a)
    return out


def pcomp(*pros):
    out = pros[0]
    for m in pros[1:]:
        out = compose_pros(out, m)
    return out


# ---------------------------------------------------------------------------
# structural-arrow expansion (the strict tensor-coherence equalities)
# ---------------------------------------------------------------------------


def braid_arrow(sig, u, w):
    """sigma<u, w> fully expanded to adjacent-generator braidings.

    Nullary: braiding with the unit is an identity.  Binary, first index:
    sigma<a.u', w> = (a (x) sigma<u', w>) ; (sigma<a, w> (x) u'); second
    index: sigma<a, b.w'> = (sigma<a, b> (x) w') ; (b (x) sigma<a, w'>).
    """
    if not sig.flags.braided:
        raise StructureUnavailable("braiding needs the braided flag")
    u = tuple(u)
    w = tuple(w)
    pu = _endo_path(sig, u, "braiding")
    pw = _endo_path(sig, w, "braiding")
    if pu.src != pw.src:
        raise IllTyped("braiding factors must share a 0-cell")
    if not u:
        return arrow_id(pw)
    if not w:
        return arrow_id(pu)
    empty = Path(pu.src, pu.src, ())
    if len(u) == 1 and len(w) == 1:
        return atom_arrow(sig, BraidA(u, w))
    if len(u) > 1:
        a, rest = u[:1], u[1:]
        pa = path(sig, a)
        prest = path(sig, rest)
        first = whisker_arrow(sig, pa, braid_arrow(sig, rest, w), empty)
        second = whisker_arrow(sig, empty, braid_arrow(sig, a, w), prest)
        return compose_arrows(first, second)
    b, rest = w[:1], w[1:]
    pb = path(sig, b)
    prest = path(sig, rest)
    first = whisker_arrow(sig, empty, braid_arrow(sig, u, b), prest)
    second = whisker_arrow(sig, pb, braid_arrow(sig, u, rest), empty)
    return compose_arrows(first, second)


def dup_arrow(sig, w, primed=False):
    """delta(w) (or delta'(w)) expanded: duplicate the factors sequentially
    and braid the copies into order."""
    if not sig.flags.duplication:
        raise StructureUnavailable("duplicators need the duplication flag")
    w = tuple(w)
    p = _endo_path(sig, w, "duplicator")
    if not w:
        return arrow_id(p)
    if len(w) == 1:
        return atom_arrow(sig, DupA(w, primed))
    a, x = w[:1], w[1:]
    pa = path(sig, a)
    px = path(sig, x)
    idp = Path(p.src, p.src, ())
    braid_mid = whisker_arrow(sig, pa, braid_arrow(sig, a, x), px)
    if not primed:
        # delta(A.X) = (A (x) delta X) ; (delta A (x) X.X) ; (A (x) sigma<A,X> (x) X)
        s1 = whisker_arrow(sig, pa, dup_arrow(sig, x, False), idp)
        s2 = whisker_arrow(sig, idp, dup_arrow(sig, a, False), concat_path(px, px))
        return acomp(s1, s2, braid_mid)
    # delta'(A.X) = (delta' A (x) X) ; (A.A (x) delta' X) ; (A (x) sigma<A,X> (x) X)
    s1 = whisker_arrow(sig, idp, dup_arrow(sig, a, True), px)
    s2 = whisker_arrow(sig, concat_path(pa, pa), dup_arrow(sig, x, True), idp)
    return acomp(s1, s2, braid_mid)


def del_arrow(sig, w):
    """eps(w) expanded: delete the factors sequentially."""
    if not sig.flags.deletion:
        raise StructureUnavailable("deletors need the deletion flag")
    w = tuple(w)
    p = _endo_path(sig, w, "deletor")
    if not w:
        return arrow_id(p)
    if len(w) == 1:
        return atom_arrow(sig, DelA(w))
    a, x = w[:1], w[1:]
    px = path(sig, x)
    idp = Path(p.src, p.src, ())
    s1 = whisker_arrow(sig, idp, del_arrow(sig, a), px)
    return compose_arrows(s1, del_arrow(sig, x))


def companion_pro(sig, a):
    """Companion of an arrow; preserves composition and whiskering."""
    atoms = []
    for at in a.atoms:
        _require_connectable(sig, at.core)
        atoms.append(HAtom(at.left, CompanionH(at.core), at.right))
    return Proarrow(a.src, a.tgt, tuple(atoms))


def conjoint_pro(sig, a):
    """Conjoint of an arrow; contravariant on composition."""
    atoms = []
    for at in reversed(a.atoms):
        _require_connectable(sig, at.core)
        atoms.append(HAtom(at.left, ConjointH(at.core), at.right))
    return Proarrow(a.tgt, a.src, tuple(atoms))


def expand_arrow(sig, a):
    """Strict normal form of an arrow: every structural core indexed by
    single generators.  Declared generators and adjunction cells are atomic
    already; braid/dup/del cores on words expand."""
    out = arrow_id(a.src)
    for at in a.atoms:
        core = at.core
        if isinstance(core, BraidA) and not (len(core.u) == 1 and len(core.w) == 1):
            inner = braid_arrow(sig, core.u, core.w)
        elif isinstance(core, DupA) and len(core.w) != 1:
            inner = dup_arrow(sig, core.w, core.primed)
        elif isinstance(core, DelA) and len(core.w) != 1:
            inner = del_arrow(sig, core.w)
        else:
            out = compose_arrows(out, mk_arrow(sig, [at]))
            continue
        out = compose_arrows(out, whisker_arrow(sig, at.left, inner, at.right))
    return out


def expand_pro(sig, m):
    """Strict normal form of a proarrow: companions/conjoints of structural
    word cores expand through `expand_arrow` (both operations preserve
    composition)."""
    out = pro_id(m.src)
    for at in m.atoms:
        core = at.core
        if isinstance(core, (CompanionH, ConjointH)):
            inner_arrow = expand_arrow(sig, atom_arrow(sig, core.of))
            if len(inner_arrow.atoms) == 1 and inner_arrow.atoms[0].core == core.of:
                out = compose_pros(out, mk_pro(sig, [at]))
                continue
            conv = companion_pro if isinstance(core, CompanionH) else conjoint_pro
            inner = conv(sig, inner_arrow)
            out = compose_pros(out, whisker_pro(sig, at.left, inner, at.right))
        else:
            out = compose_pros(out, mk_pro(sig, [at]))
    return out
