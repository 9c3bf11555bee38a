"""3-cell terms, boundary computation, and the strict normalizer.

A 3-cell has a cubical boundary ⟦vsrc, vtgt; hsrc, htgt⟧: two arrows
(vertical 2-cells) and two proarrows (horizontal 2-cells) satisfying the
corner condition.  Vertical composition glues along proarrows and is
strict; horizontal composition glues along arrows.  Both are kept as
flattened n-ary sequences.

`normalize_strict` orients the strict fragment: whiskering laws, composite
interchanger laws, tensor-coherence expansions of structural cells,
companion expansion, identity absorption, and coherator collapse on
identity arguments.  Coherence equalities stay in the rule database.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import (
    Arrow,
    BraidA,
    CompanionH,
    ConjointH,
    DelA,
    DupA,
    AdjEta,
    AdjEps,
    HAtom,
    HGen,
    Path,
    Proarrow,
    VAtom,
    VGen,
    arrow_id,
    atom_arrow,
    atom_pro,
    braid_arrow,
    companion_pro,
    compose_arrows,
    compose_pros,
    concat_path,
    conjoint_pro,
    del_arrow,
    dup_arrow,
    expand_arrow,
    expand_pro,
    hcore_bounds,
    mk_arrow,
    mk_pro,
    path,
    pro_id,
    vcore_bounds,
    whisker_arrow,
    whisker_pro,
)
from .errors import IllTyped, StructureUnavailable

# ---------------------------------------------------------------------------
# term constructors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqGenRef:
    name: str


@dataclass(frozen=True)
class VId:
    """Vertical identity square on a proarrow."""

    pro: Proarrow


@dataclass(frozen=True)
class HId:
    """Horizontal identity square on an arrow."""

    arr: Arrow


@dataclass(frozen=True)
class VSeq:
    """n-ary vertical composite (glues along proarrows)."""

    items: tuple


@dataclass(frozen=True)
class HSeq:
    """n-ary horizontal composite (glues along arrows)."""

    items: tuple


@dataclass(frozen=True)
class Whisk:
    left: Path
    body: object
    right: Path


@dataclass(frozen=True)
class Ixc:
    """Interchanger of two 2-cells separated by a 1-cell.

    kind: 'vv' | 'vh' | 'hv' | 'hh'; `a` is an Arrow for v*, a Proarrow for
    h*; likewise `b`.  For the homogeneous kinds the signature's variance
    flag selects the oplax or lax orientation.
    """

    kind: str
    a: object
    mid: Path
    b: object
    variance: str = "oplax"


@dataclass(frozen=True)
class Coh:
    """Horizontal-composition coherator: lam/rho (unitors) or kap (associator)."""

    kind: str
    args: tuple


@dataclass(frozen=True)
class Struct:
    tag: object


@dataclass(frozen=True)
class Inv:
    body: object


CELL3_TYPES = (SqGenRef, VId, HId, VSeq, HSeq, Whisk, Ixc, Coh, Struct, Inv)


def vcomp(*items):
    return VSeq(tuple(items)) if len(items) != 1 else items[0]


def hcomp(*items):
    return HSeq(tuple(items)) if len(items) != 1 else items[0]


# ---------------------------------------------------------------------------
# structural tags
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TBraidSq:
    """Braiding proarrow-component square sigma<m, x> (or sigma<x, m>)."""

    m: object  # HCore
    x: tuple[str, ...]
    right: bool = False  # True: object word on the left, proarrow on the right


@dataclass(frozen=True)
class TBraidDisk:
    """Braiding arrow-component disk sigma<f, x> (or sigma<x, f>)."""

    f: object  # VCore
    x: tuple[str, ...]
    right: bool = False


@dataclass(frozen=True)
class TYB:
    """Yang-Baxterator on three generator objects."""

    a: str
    b: str
    c: str


@dataclass(frozen=True)
class TSyl:
    """Syllepsis component nu<u, w> : id => sigma<u,w> ; sigma<w,u>."""

    u: tuple[str, ...]
    w: tuple[str, ...]


@dataclass(frozen=True)
class TDupSq:
    m: object  # HCore
    primed: bool = False


@dataclass(frozen=True)
class TDupDisk:
    f: object  # VCore
    primed: bool = False


@dataclass(frozen=True)
class TDelSq:
    m: object


@dataclass(frozen=True)
class TDelDisk:
    f: object


@dataclass(frozen=True)
class TCoassoc:
    a: str
    primed: bool = False


@dataclass(frozen=True)
class TCocom:
    a: str
    primed: bool = False


@dataclass(frozen=True)
class TCounitor:
    a: str
    side: str  # 'l' | 'r'
    primed: bool = False


@dataclass(frozen=True)
class TConn:
    """Connection square of a companion/conjoint pair."""

    f: object  # VCore
    kind: str  # 'cod' | 'dom' | 'sec' | 'ret'


@dataclass(frozen=True)
class TAdjS:
    f: str
    g: str


@dataclass(frozen=True)
class TAdjT:
    f: str
    g: str


# ---------------------------------------------------------------------------
# boundaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Boundary3:
    vsrc: Arrow
    vtgt: Arrow
    hsrc: Proarrow
    htgt: Proarrow

    def corners_ok(self):
        return (
            self.vsrc.src == self.hsrc.src
            and self.vsrc.tgt == self.htgt.src
            and self.vtgt.src == self.hsrc.tgt
            and self.vtgt.tgt == self.htgt.tgt
        )

    @property
    def pro_globular(self):
        return self.hsrc.is_identity and self.htgt.is_identity

    @property
    def arrow_globular(self):
        return self.vsrc.is_identity and self.vtgt.is_identity


def _empty_path_at(obj):
    return Path(obj, obj, ())


def _braid_atom(sig, u, w):
    """sigma<u, w> as an unexpanded single-core arrow (identity if a factor
    is the unit)."""
    if not u or not w:
        p = path(sig, u or w) if (u or w) else None
        if p is None:
            raise IllTyped("braiding of two unit words needs a 0-cell")
        return arrow_id(p)
    return atom_arrow(sig, BraidA(tuple(u), tuple(w)))


def _dup_atom(sig, w, primed):
    if not w:
        raise IllTyped("duplicator of the unit is an identity; build it via dup_arrow")
    return atom_arrow(sig, DupA(tuple(w), primed))


def _gates(sig, tag):
    f = sig.flags
    if isinstance(tag, (TBraidSq, TBraidDisk, TYB)) and not f.braided:
        raise StructureUnavailable("braiding cells need the braided flag")
    if isinstance(tag, TSyl) and not f.sylleptic:
        raise StructureUnavailable("syllepsis cells need the sylleptic flag")
    if isinstance(tag, (TDupSq, TDupDisk, TCoassoc, TCocom)) and not f.duplication:
        raise StructureUnavailable("duplication cells need the duplication flag")
    if isinstance(tag, (TDelSq, TDelDisk, TCounitor)) and not f.deletion:
        raise StructureUnavailable("deletion cells need the deletion flag")
    if isinstance(tag, (TAdjS, TAdjT)) and (tag.f, tag.g) not in f.oplax_adjunctions:
        raise StructureUnavailable(f"({tag.f}, {tag.g}) is not a declared oplax adjunction")


def struct_boundary(sig, tag):
    _gates(sig, tag)
    if isinstance(tag, TBraidSq):
        m = atom_pro(sig, tag.m)
        px = path(sig, tag.x) if tag.x else _empty_path_at(m.src.src)
        sa = _braid_atom(sig, m.src.word, tag.x) if not tag.right else _braid_atom(sig, tag.x, m.src.word)
        sb = _braid_atom(sig, m.tgt.word, tag.x) if not tag.right else _braid_atom(sig, tag.x, m.tgt.word)
        if not tag.right:
            hsrc = whisker_pro(sig, _empty_path_at(m.src.src), m, px)
            htgt = whisker_pro(sig, px, m, _empty_path_at(m.src.src))
        else:
            hsrc = whisker_pro(sig, px, m, _empty_path_at(m.src.src))
            htgt = whisker_pro(sig, _empty_path_at(m.src.src), m, px)
        return Boundary3(sa, sb, hsrc, htgt)
    if isinstance(tag, TBraidDisk):
        fsrc, ftgt = vcore_bounds(sig, tag.f)
        o = fsrc.src
        px = path(sig, tag.x) if tag.x else _empty_path_at(o)
        f_arr = atom_arrow(sig, tag.f)
        if not tag.right:
            # sigma<f, x> : (f (x) x);sigma<tgt f, x>  =>  sigma<src f, x>;(x (x) f)
            vsrc = compose_arrows(
                whisker_arrow(sig, _empty_path_at(o), f_arr, px),
                _braid_atom(sig, ftgt.word, tag.x),
            )
            vtgt = compose_arrows(
                _braid_atom(sig, fsrc.word, tag.x),
                whisker_arrow(sig, px, f_arr, _empty_path_at(o)),
            )
            return Boundary3(vsrc, vtgt, pro_id(concat_path(fsrc, px)), pro_id(concat_path(px, ftgt)))
        vsrc = compose_arrows(
            whisker_arrow(sig, px, f_arr, _empty_path_at(o)),
            _braid_atom(sig, tag.x, ftgt.word),
        )
        vtgt = compose_arrows(
            _braid_atom(sig, tag.x, fsrc.word),
            whisker_arrow(sig, _empty_path_at(o), f_arr, px),
        )
        return Boundary3(vsrc, vtgt, pro_id(concat_path(px, fsrc)), pro_id(concat_path(ftgt, px)))
    if isinstance(tag, TYB):
        a, b, c = tag.a, tag.b, tag.c
        pa, pb, pc = path(sig, [a]), path(sig, [b]), path(sig, [c])
        o = pa.src
        e = _empty_path_at(o)

        def br(u, w):
            return _braid_atom(sig, (u,), (w,))

        vsrc = compose_arrows(
            compose_arrows(
                whisker_arrow(sig, e, br(a, b), pc), whisker_arrow(sig, pb, br(a, c), e)
            ),
            whisker_arrow(sig, e, br(b, c), pa),
        )
        vtgt = compose_arrows(
            compose_arrows(
                whisker_arrow(sig, pa, br(b, c), e), whisker_arrow(sig, e, br(a, c), pb)
            ),
            whisker_arrow(sig, pc, br(a, b), e),
        )
        abc = path(sig, [a, b, c])
        cba = path(sig, [c, b, a])
        return Boundary3(vsrc, vtgt, pro_id(abc), pro_id(cba))
    if isinstance(tag, TSyl):
        u, w = tuple(tag.u), tuple(tag.w)
        if u and w:
            puw = concat_path(path(sig, u), path(sig, w))
        else:
            puw = path(sig, u or w) if (u or w) else None
            if puw is None:
                raise IllTyped("syllepsis of two unit words needs a 0-cell")
        vtgt = compose_arrows(_braid_atom(sig, u, w), _braid_atom(sig, w, u))
        return Boundary3(arrow_id(puw), vtgt, pro_id(puw), pro_id(puw))
    if isinstance(tag, TDupSq):
        m = atom_pro(sig, tag.m)
        u, v = m.src, m.tgt
        o = u.src
        e = _empty_path_at(o)
        du = _dup_atom(sig, u.word, tag.primed) if u.word else arrow_id(u)
        dv = _dup_atom(sig, v.word, tag.primed) if v.word else arrow_id(v)
        if not tag.primed:
            htgt = compose_pros(whisker_pro(sig, u, m, e), whisker_pro(sig, e, m, v))
        else:
            htgt = compose_pros(whisker_pro(sig, e, m, u), whisker_pro(sig, v, m, e))
        return Boundary3(du, dv, whisker_pro(sig, e, m, e), htgt)
    if isinstance(tag, TDupDisk):
        fsrc, ftgt = vcore_bounds(sig, tag.f)
        o = fsrc.src
        e = _empty_path_at(o)
        f_arr = atom_arrow(sig, tag.f)
        dp = _dup_atom(sig, fsrc.word, tag.primed) if fsrc.word else arrow_id(fsrc)
        dq = _dup_atom(sig, ftgt.word, tag.primed) if ftgt.word else arrow_id(ftgt)
        vsrc = compose_arrows(f_arr, dq)
        if not tag.primed:
            mid = compose_arrows(
                whisker_arrow(sig, fsrc, f_arr, e), whisker_arrow(sig, e, f_arr, ftgt)
            )
        else:
            mid = compose_arrows(
                whisker_arrow(sig, e, f_arr, fsrc), whisker_arrow(sig, ftgt, f_arr, e)
            )
        vtgt = compose_arrows(dp, mid)
        return Boundary3(vsrc, vtgt, pro_id(fsrc), pro_id(concat_path(ftgt, ftgt)))
    if isinstance(tag, TDelSq):
        m = atom_pro(sig, tag.m)
        u, v = m.src, m.tgt
        o = u.src
        eu = atom_arrow(sig, DelA(u.word)) if u.word else arrow_id(u)
        ev = atom_arrow(sig, DelA(v.word)) if v.word else arrow_id(v)
        e = _empty_path_at(o)
        return Boundary3(eu, ev, whisker_pro(sig, e, m, e), pro_id(e))
    if isinstance(tag, TDelDisk):
        fsrc, ftgt = vcore_bounds(sig, tag.f)
        o = fsrc.src
        f_arr = atom_arrow(sig, tag.f)
        ep = atom_arrow(sig, DelA(fsrc.word)) if fsrc.word else arrow_id(fsrc)
        eq = atom_arrow(sig, DelA(ftgt.word)) if ftgt.word else arrow_id(ftgt)
        vsrc = compose_arrows(f_arr, eq)
        return Boundary3(vsrc, ep, pro_id(fsrc), pro_id(_empty_path_at(o)))
    if isinstance(tag, TCoassoc):
        a = tag.a
        pa = path(sig, [a])
        e = _empty_path_at(pa.src)
        d = _dup_atom(sig, (a,), tag.primed)
        left = compose_arrows(d, whisker_arrow(sig, e, d, pa))
        right = compose_arrows(d, whisker_arrow(sig, pa, d, e))
        paaa = path(sig, [a, a, a])
        return Boundary3(left, right, pro_id(pa), pro_id(paaa))
    if isinstance(tag, TCocom):
        a = tag.a
        pa = path(sig, [a])
        d = _dup_atom(sig, (a,), tag.primed)
        d_other = _dup_atom(sig, (a,), not tag.primed)
        vtgt = compose_arrows(d_other, _braid_atom(sig, (a,), (a,)))
        paa = path(sig, [a, a])
        return Boundary3(d, vtgt, pro_id(pa), pro_id(paa))
    if isinstance(tag, TCounitor):
        a = tag.a
        pa = path(sig, [a])
        e = _empty_path_at(pa.src)
        d = _dup_atom(sig, (a,), tag.primed)
        eps = atom_arrow(sig, DelA((a,)))
        if tag.side == "l":
            kill = whisker_arrow(sig, e, eps, pa)
        else:
            kill = whisker_arrow(sig, pa, eps, e)
        vsrc = compose_arrows(d, kill)
        return Boundary3(vsrc, arrow_id(pa), pro_id(pa), pro_id(pa))
    if isinstance(tag, TConn):
        fsrc, ftgt = vcore_bounds(sig, tag.f)
        f_arr = atom_arrow(sig, tag.f)
        if tag.kind == "cod":
            hat = atom_pro(sig, CompanionH(tag.f))
            return Boundary3(arrow_id(fsrc), f_arr, pro_id(fsrc), hat)
        if tag.kind == "dom":
            hat = atom_pro(sig, CompanionH(tag.f))
            return Boundary3(f_arr, arrow_id(ftgt), hat, pro_id(ftgt))
        if tag.kind == "sec":
            chk = atom_pro(sig, ConjointH(tag.f))
            return Boundary3(arrow_id(ftgt), f_arr, chk, pro_id(ftgt))
        if tag.kind == "ret":
            chk = atom_pro(sig, ConjointH(tag.f))
            return Boundary3(f_arr, arrow_id(fsrc), pro_id(fsrc), chk)
        raise IllTyped(f"unknown connection kind {tag.kind!r}")
    if isinstance(tag, TAdjS):
        g = sig.gen1(tag.g)
        pg = path(sig, [tag.g])
        e_src = _empty_path_at(g.src)
        e_tgt = _empty_path_at(g.tgt)
        eta = atom_arrow(sig, AdjEta(tag.f, tag.g))
        eps = atom_arrow(sig, AdjEps(tag.f, tag.g))
        vtgt = compose_arrows(
            whisker_arrow(sig, pg, eta, e_tgt), whisker_arrow(sig, e_src, eps, pg)
        )
        return Boundary3(arrow_id(pg), vtgt, pro_id(pg), pro_id(pg))
    if isinstance(tag, TAdjT):
        pf = path(sig, [tag.f])
        f = sig.gen1(tag.f)
        e_src = _empty_path_at(f.src)
        e_tgt = _empty_path_at(f.tgt)
        eta = atom_arrow(sig, AdjEta(tag.f, tag.g))
        eps = atom_arrow(sig, AdjEps(tag.f, tag.g))
        vsrc = compose_arrows(
            whisker_arrow(sig, e_src, eta, pf), whisker_arrow(sig, pf, eps, e_tgt)
        )
        return Boundary3(vsrc, arrow_id(pf), pro_id(pf), pro_id(pf))
    raise IllTyped(f"unknown structural tag {tag!r}")


INVERTIBLE_TAGS = (TBraidDisk, TYB, TSyl, TCoassoc, TCocom, TCounitor)


def is_invertible(sig, t):
    """Whether Inv may wrap `t` (coherators, pseudo interchangers, the
    invertible pack cells, and composites/whiskerings/inverses thereof)."""
    if isinstance(t, (VId, HId, Coh)):
        return True
    if isinstance(t, Inv):
        return is_invertible(sig, t.body)
    if isinstance(t, Whisk):
        return is_invertible(sig, t.body)
    if isinstance(t, (VSeq, HSeq)):
        return all(is_invertible(sig, x) for x in t.items)
    if isinstance(t, Ixc):
        if t.kind in ("vv", "hh"):
            variance = (
                sig.flags.interchanger_variance_vv
                if t.kind == "vv"
                else sig.flags.interchanger_variance_hh
            )
            return variance == "pseudo"
        return False
    if isinstance(t, Struct):
        return isinstance(t.tag, INVERTIBLE_TAGS)
    return False


def _expand_b(sig, b):
    return Boundary3(
        expand_arrow(sig, b.vsrc),
        expand_arrow(sig, b.vtgt),
        expand_pro(sig, b.hsrc),
        expand_pro(sig, b.htgt),
    )


def _two_cell_bounds(sig, x):
    if isinstance(x, Arrow):
        return expand_arrow(sig, x)
    if isinstance(x, Proarrow):
        return expand_pro(sig, x)
    raise IllTyped(f"interchanger argument must be a 2-cell, got {type(x).__name__}")


def ixc_boundary(sig, t):
    a = _two_cell_bounds(sig, t.a)
    b = _two_cell_bounds(sig, t.b)
    kind = t.kind
    want_a = Arrow if kind[0] == "v" else Proarrow
    want_b = Arrow if kind[1] == "v" else Proarrow
    if not isinstance(a, want_a) or not isinstance(b, want_b):
        raise IllTyped(f"interchanger kind {kind!r} got mismatched 2-cells")
    if kind in ("vv", "hh") and t.variance not in ("oplax", "lax"):
        raise IllTyped(f"interchanger variance {t.variance!r} is not a stored orientation")
    f, fp = a.src, a.tgt
    mid = t.mid
    g, gp = b.src, b.tgt
    if f.tgt != mid.src or mid.tgt != g.src:
        raise IllTyped("interchanger arguments do not meet the middle 1-cell")
    e_left = _empty_path_at(f.src)
    e_right = _empty_path_at(g.tgt)

    def wl(x, ctx):  # whisker a 2-cell on the left by ctx
        fn = whisker_arrow if isinstance(x, Arrow) else whisker_pro
        return fn(sig, ctx, x, e_right)

    def wr(x, ctx):
        fn = whisker_arrow if isinstance(x, Arrow) else whisker_pro
        return fn(sig, e_left, x, ctx)

    if kind == "vh":
        return Boundary3(
            wr(a, concat_path(mid, g)),
            wr(a, concat_path(mid, gp)),
            wl(b, concat_path(f, mid)),
            wl(b, concat_path(fp, mid)),
        )
    if kind == "hv":
        return Boundary3(
            wl(b, concat_path(f, mid)),
            wl(b, concat_path(fp, mid)),
            wr(a, concat_path(mid, g)),
            wr(a, concat_path(mid, gp)),
        )
    if kind == "vv":
        vsrc = compose_arrows(wr(a, concat_path(mid, g)), wl(b, concat_path(fp, mid)))
        vtgt = compose_arrows(wl(b, concat_path(f, mid)), wr(a, concat_path(mid, gp)))
        if t.variance == "lax":
            vsrc, vtgt = vtgt, vsrc
        return Boundary3(
            vsrc,
            vtgt,
            pro_id(concat_path(concat_path(f, mid), g)),
            pro_id(concat_path(concat_path(fp, mid), gp)),
        )
    if kind == "hh":
        hsrc = compose_pros(wr(a, concat_path(mid, g)), wl(b, concat_path(fp, mid)))
        htgt = compose_pros(wl(b, concat_path(f, mid)), wr(a, concat_path(mid, gp)))
        if t.variance == "lax":
            hsrc, htgt = htgt, hsrc
        return Boundary3(
            arrow_id(concat_path(concat_path(f, mid), g)),
            arrow_id(concat_path(concat_path(fp, mid), gp)),
            hsrc,
            htgt,
        )
    raise IllTyped(f"unknown interchanger kind {t.kind!r}")


_BOUNDARY_CACHE = {}


def boundary3(sig, t, _pos=()):
    """Boundary of a 3-cell term; components come back 2-cell-normalized.

    Raises IllTyped at the first node whose children's boundaries do not
    meet the constructor's side conditions.
    """
    key = (id(sig), t)
    hit = _BOUNDARY_CACHE.get(key)
    if hit is not None:
        return hit
    try:
        out = _boundary3(sig, t, _pos)
    except IllTyped:
        raise
    except Exception as e:  # endpoint errors inside children become IllTyped
        raise IllTyped(str(e), position=_pos) from e
    if len(_BOUNDARY_CACHE) > 200000:
        _BOUNDARY_CACHE.clear()
    _BOUNDARY_CACHE[key] = out
    return out


def _boundary3(sig, t, pos):
    if isinstance(t, SqGenRef):
        g = sig.genSq(t.name)
        spec = g.spec

        def arr(names, at):
            if not names:
                return arrow_id(at)
            a = atom_arrow(sig, VGen(names[0]))
            for n in names[1:]:
                a = compose_arrows(a, atom_arrow(sig, VGen(n)))
            return a

        def pro(names, at):
            if not names:
                return pro_id(at)
            m = atom_pro(sig, HGen(names[0]))
            for n in names[1:]:
                m = compose_pros(m, atom_pro(sig, HGen(n)))
            return m

        hsrc = pro(spec.hsrc, None) if spec.hsrc else None
        htgt = pro(spec.htgt, None) if spec.htgt else None
        vsrc = arr(spec.vsrc, hsrc.src if hsrc is not None else None) if spec.vsrc or hsrc is not None else None
        if vsrc is None:
            raise IllTyped(f"square generator {t.name!r} is fully degenerate", position=pos)
        vtgt = arr(spec.vtgt, hsrc.tgt if hsrc is not None else vsrc.src)
        if hsrc is None:
            hsrc = pro_id(vsrc.src)
        if htgt is None:
            htgt = pro_id(vsrc.tgt)
        b = Boundary3(vsrc, vtgt, hsrc, htgt)
        if not b.corners_ok():
            raise IllTyped(f"square generator {t.name!r} violates the corner condition", position=pos)
        return b
    if isinstance(t, VId):
        m = expand_pro(sig, t.pro)
        return Boundary3(arrow_id(m.src), arrow_id(m.tgt), m, m)
    if isinstance(t, HId):
        a = expand_arrow(sig, t.arr)
        return Boundary3(a, a, pro_id(a.src), pro_id(a.tgt))
    if isinstance(t, VSeq):
        if not t.items:
            raise IllTyped("empty vertical composite", position=pos)
        bs = [boundary3(sig, x, pos + (i,)) for i, x in enumerate(t.items)]
        for i in range(len(bs) - 1):
            if bs[i].htgt != bs[i + 1].hsrc:
                raise IllTyped(
                    f"vertical composite does not glue at item {i}: "
                    f"{bs[i].htgt} vs {bs[i + 1].hsrc}",
                    position=pos + (i + 1,),
                )
        vsrc = bs[0].vsrc
        vtgt = bs[0].vtgt
        for b in bs[1:]:
            vsrc = compose_arrows(vsrc, b.vsrc)
            vtgt = compose_arrows(vtgt, b.vtgt)
        return Boundary3(vsrc, vtgt, bs[0].hsrc, bs[-1].htgt)
    if isinstance(t, HSeq):
        if not t.items:
            raise IllTyped("empty horizontal composite", position=pos)
        bs = [boundary3(sig, x, pos + (i,)) for i, x in enumerate(t.items)]
        for i in range(len(bs) - 1):
            if bs[i].vtgt != bs[i + 1].vsrc:
                raise IllTyped(
                    f"horizontal composite does not glue at item {i}: "
                    f"{bs[i].vtgt} vs {bs[i + 1].vsrc}",
                    position=pos + (i + 1,),
                )
        hsrc = bs[0].hsrc
        htgt = bs[0].htgt
        for b in bs[1:]:
            hsrc = compose_pros(hsrc, b.hsrc)
            htgt = compose_pros(htgt, b.htgt)
        return Boundary3(bs[0].vsrc, bs[-1].vtgt, hsrc, htgt)
    if isinstance(t, Whisk):
        b = boundary3(sig, t.body, pos + (0,))
        return Boundary3(
            whisker_arrow(sig, t.left, b.vsrc, t.right),
            whisker_arrow(sig, t.left, b.vtgt, t.right),
            whisker_pro(sig, t.left, b.hsrc, t.right),
            whisker_pro(sig, t.left, b.htgt, t.right),
        )
    if isinstance(t, Ixc):
        return _expand_b(sig, ixc_boundary(sig, t))
    if isinstance(t, Coh):
        args = tuple(expand_pro(sig, m) for m in t.args)
        if t.kind in ("lam", "rho"):
            if len(args) != 1:
                raise IllTyped(f"{t.kind} takes one proarrow", position=pos)
            m = args[0]
            return Boundary3(arrow_id(m.src), arrow_id(m.tgt), m, m)
        if t.kind == "kap":
            if len(args) != 3:
                raise IllTyped("kap takes three proarrows", position=pos)
            m = compose_pros(compose_pros(args[0], args[1]), args[2])
            return Boundary3(arrow_id(m.src), arrow_id(m.tgt), m, m)
        raise IllTyped(f"unknown coherator {t.kind!r}", position=pos)
    if isinstance(t, Struct):
        return _expand_b(sig, struct_boundary(sig, t.tag))
    if isinstance(t, Inv):
        if not is_invertible(sig, t.body):
            raise IllTyped("Inv wraps a non-invertible cell", position=pos)
        b = boundary3(sig, t.body, pos + (0,))
        # the inverse reverses the globular dimension(s) only
        if b.pro_globular and not b.arrow_globular:
            return Boundary3(b.vtgt, b.vsrc, b.hsrc, b.htgt)
        if b.arrow_globular and not b.pro_globular:
            return Boundary3(b.vsrc, b.vtgt, b.htgt, b.hsrc)
        if b.pro_globular and b.arrow_globular:
            return Boundary3(b.vtgt, b.vsrc, b.htgt, b.hsrc)
        raise IllTyped("Inv wraps a cell that is globular in neither dimension", position=pos)
    raise IllTyped(f"not a 3-cell term: {t!r}", position=pos)
