"""Generator declarations and structural-capability flags.

A signature lists the generating cells of a free locally cubical Gray
category: 0-cells, 1-cells, vertical and horizontal 2-cells, and square
3-cells, plus flags switching on the structural packs (braiding,
syllepsis, symmetry, duplication, deletion, companions, oplax
adjunctions).  Signatures are immutable after validation; `declare`
returns extended copies.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import (
    BoundaryMismatch,
    DuplicateName,
    FlagDependencyViolation,
    UnknownReference,
)

BASE = "*"  # implicit 0-cell used by monoidal-style signatures

VARIANCES = ("oplax", "lax", "pseudo")


@dataclass(frozen=True)
class ObjGen:
    name: str


@dataclass(frozen=True)
class Gen1:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class PathSpec:
    """A 1-cell word by generator names; endpoints are derived."""

    word: tuple[str, ...]
    at: str | None = None  # 0-cell, only needed for the empty word

    def __init__(self, word=(), at=None):
        object.__setattr__(self, "word", tuple(word))
        object.__setattr__(self, "at", at)


@dataclass(frozen=True)
class GenV:
    name: str
    src: PathSpec
    tgt: PathSpec


@dataclass(frozen=True)
class GenH:
    name: str
    src: PathSpec
    tgt: PathSpec


@dataclass(frozen=True)
class SquareSpec:
    """Boundary of a square generator, all four sides by generator words.

    Sides are words of 2-cell generator names composed in sequence; an
    empty arrow side denotes the identity arrow on the adjacent proarrow
    endpoint (a globular disk generator), and dually for proarrow sides.
    """

    vsrc: tuple[str, ...]
    vtgt: tuple[str, ...]
    hsrc: tuple[str, ...]
    htgt: tuple[str, ...]


@dataclass(frozen=True)
class GenSq:
    name: str
    spec: SquareSpec


@dataclass(frozen=True)
class StructureFlags:
    interchanger_variance_vv: str = "oplax"
    interchanger_variance_hh: str = "oplax"
    braided: bool = False
    sylleptic: bool = False
    symmetric: bool = False
    duplication: bool = False
    deletion: bool = False
    oplax_adjunctions: tuple[tuple[str, str], ...] = ()
    companionable: frozenset[str] = frozenset()
    conjoinable: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Signature:
    objects: tuple[ObjGen, ...] = (ObjGen(BASE),)
    gens1: tuple[Gen1, ...] = ()
    gensV: tuple[GenV, ...] = ()
    gensH: tuple[GenH, ...] = ()
    gensSq: tuple[GenSq, ...] = ()
    flags: StructureFlags = field(default_factory=StructureFlags)

    # -- lookup helpers -------------------------------------------------

    def obj(self, name):
        for o in self.objects:
            if o.name == name:
                return o
        raise UnknownReference(f"unknown 0-cell {name!r}", name=name)

    def gen1(self, name):
        for g in self.gens1:
            if g.name == name:
                return g
        raise UnknownReference(f"unknown 1-cell generator {name!r}", name=name)

    def genV(self, name):
        for g in self.gensV:
            if g.name == name:
                return g
        raise UnknownReference(f"unknown arrow generator {name!r}", name=name)

    def genH(self, name):
        for g in self.gensH:
            if g.name == name:
                return g
        raise UnknownReference(f"unknown proarrow generator {name!r}", name=name)

    def genSq(self, name):
        for g in self.gensSq:
            if g.name == name:
                return g
        raise UnknownReference(f"unknown square generator {name!r}", name=name)

    def has_gen1(self, name):
        return any(g.name == name for g in self.gens1)

    def all_names(self):
        for coll in (self.objects, self.gens1, self.gensV, self.gensH, self.gensSq):
            for g in coll:
                yield g.name

    def adjunction_pairs(self):
        return self.flags.oplax_adjunctions


# -- declaration -------------------------------------------------------


def declare(sig, item):
    """Extend `sig` with a generator or flags; re-validates the result."""
    if isinstance(item, ObjGen):
        new = replace(sig, objects=sig.objects + (item,))
    elif isinstance(item, Gen1):
        new = replace(sig, gens1=sig.gens1 + (item,))
    elif isinstance(item, GenV):
        new = replace(sig, gensV=sig.gensV + (item,))
    elif isinstance(item, GenH):
        new = replace(sig, gensH=sig.gensH + (item,))
    elif isinstance(item, GenSq):
        new = replace(sig, gensSq=sig.gensSq + (item,))
    elif isinstance(item, StructureFlags):
        new = replace(sig, flags=item)
    else:
        raise TypeError(f"cannot declare {item!r}")
    problems = validate(new)
    if problems:
        raise problems[0]
    return new


def _word_endpoints(sig, spec, what, owner):
    """Resolve a PathSpec to (src 0-cell, tgt 0-cell), checking composability."""
    if not spec.word:
        at = spec.at if spec.at is not None else BASE
        return at, at
    src = None
    cur = None
    for name in spec.word:
        g = sig.gen1(name)
        if cur is None:
            src = g.src
        elif g.src != cur:
            raise BoundaryMismatch(
                f"{what} of {owner!r}: {name!r} does not compose at {cur!r}",
                name=owner,
            )
        cur = g.tgt
    return src, cur


def validate(sig):
    """Return the list of invariant violations (empty iff valid)."""
    problems = []

    seen = set()
    for name in sig.all_names():
        if name in seen:
            problems.append(DuplicateName(f"duplicate generator name {name!r}", name=name))
        seen.add(name)

    objnames = {o.name for o in sig.objects}
    for g in sig.gens1:
        for end in (g.src, g.tgt):
            if end not in objnames:
                problems.append(
                    UnknownReference(f"1-cell {g.name!r} references unknown 0-cell {end!r}", name=g.name)
                )

    def check_parallel(g, kind):
        try:
            s = _word_endpoints(sig, g.src, "source", g.name)
            t = _word_endpoints(sig, g.tgt, "target", g.name)
        except (UnknownReference, BoundaryMismatch) as e:
            problems.append(e)
            return
        if s != t:
            problems.append(
                BoundaryMismatch(
                    f"{kind} {g.name!r}: source and target words are not parallel ({s} vs {t})",
                    name=g.name,
                )
            )

    for g in sig.gensV:
        check_parallel(g, "arrow generator")
    for g in sig.gensH:
        check_parallel(g, "proarrow generator")

    for g in sig.gensSq:
        problems.extend(_validate_square(sig, g))

    problems.extend(_validate_flags(sig))
    return problems


def _side_paths(sig, names, kind, owner, problems):
    """Resolve a word of 2-cell generator names to its (src, tgt) words."""
    lookup = sig.genV if kind == "v" else sig.genH
    word_src = []
    word_tgt = []
    prev_end = None
    for name in names:
        try:
            g = lookup(name)
        except UnknownReference as e:
            problems.append(e)
            return None
        if kind == "v":
            # arrows in a square side compose sequentially: tgt word of one
            # must extend; for declarations we only allow single names
            pass
        word_src.extend(g.src.word)
        word_tgt.extend(g.tgt.word)
        prev_end = g
    _ = prev_end
    return tuple(word_src), tuple(word_tgt)


def _validate_square(sig, g):
    """Cubical corner condition for a square generator.

    vsrc : hsrc.src -> htgt.src, vtgt : hsrc.tgt -> htgt.tgt, with all four
    sides given by generators.
    """
    problems = []
    spec = g.spec

    def v_ends(names):
        src = []
        tgt = []
        for n in names:
            try:
                gv = sig.genV(n)
            except UnknownReference as e:
                problems.append(e)
                return None
            src.extend(gv.src.word)
            tgt.extend(gv.tgt.word)
        return tuple(src), tuple(tgt)

    def h_ends(names):
        src = []
        tgt = []
        for n in names:
            try:
                gh = sig.genH(n)
            except UnknownReference as e:
                problems.append(e)
                return None
            src.extend(gh.src.word)
            tgt.extend(gh.tgt.word)
        return tuple(src), tuple(tgt)

    vs = v_ends(spec.vsrc)
    vt = v_ends(spec.vtgt)
    hs = h_ends(spec.hsrc)
    ht = h_ends(spec.htgt)
    if None in (vs, vt, hs, ht):
        return problems
    # empty sides are identities on the adjacent endpoints
    if not spec.hsrc:
        hs = (vs[0], vt[0])
    if not spec.htgt:
        ht = (vs[1], vt[1])
    if not spec.vsrc:
        vs = (hs[0], ht[0])
    if not spec.vtgt:
        vt = (hs[1], ht[1])
    corners = [
        (vs[0], hs[0], "vsrc.src = hsrc.src"),
        (vs[1], ht[0], "vsrc.tgt = htgt.src"),
        (vt[0], hs[1], "vtgt.src = hsrc.tgt"),
        (vt[1], ht[1], "vtgt.tgt = htgt.tgt"),
    ]
    for a, b, law in corners:
        if a != b:
            problems.append(
                BoundaryMismatch(
                    f"square {g.name!r} violates the corner condition {law}: {a} != {b}",
                    name=g.name,
                )
            )
    return problems


def _validate_flags(sig):
    problems = []
    f = sig.flags
    if f.interchanger_variance_vv not in VARIANCES or f.interchanger_variance_hh not in VARIANCES:
        problems.append(FlagDependencyViolation("interchanger variance must be oplax, lax or pseudo"))
        return problems
    if f.braided and not (
        f.interchanger_variance_vv == "pseudo" and f.interchanger_variance_hh == "pseudo"
    ):
        problems.append(
            FlagDependencyViolation(
                "braided requires pseudo interchangers in both dimensions",
                flag="braided",
            )
        )
    if f.sylleptic and not f.braided:
        problems.append(FlagDependencyViolation("sylleptic requires braided", flag="sylleptic"))
    if f.symmetric and not f.sylleptic:
        problems.append(FlagDependencyViolation("symmetric requires sylleptic", flag="symmetric"))
    if f.duplication and not f.symmetric:
        problems.append(FlagDependencyViolation("duplication requires symmetric", flag="duplication"))
    if f.deletion and not f.duplication:
        problems.append(FlagDependencyViolation("deletion requires duplication", flag="deletion"))
    known_arrows = {g.name for g in sig.gensV}
    for name in sorted(f.companionable | f.conjoinable):
        if name not in known_arrows:
            problems.append(
                UnknownReference(f"companionability flag references unknown arrow generator {name!r}", name=name)
            )
    for fg in f.oplax_adjunctions:
        for name in fg:
            if not sig.has_gen1(name):
                problems.append(
                    UnknownReference(f"adjunction flag references unknown 1-cell {name!r}", name=name)
                )
    return problems
