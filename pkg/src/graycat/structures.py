"""Structural packs: braiding, Yang-Baxterator, syllepsis/symmetry,
duplication/deletion, companions/conjoints, Gray diagonals, swap, and
oplax adjunctions.

Constructors are gated on the signature's flags and raise
StructureUnavailable (never an ill-typed cell) when a pack is missing.
Comparitors of the Gray diagonals are derived composite terms.
"""

from __future__ import annotations

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
    mk_arrow,
    mk_pro,
    path,
    pro_id,
    whisker_arrow,
    whisker_pro,
)
from .errors import IllTyped, StructureUnavailable
from .kernel import (
    Coh,
    HId,
    HSeq,
    Inv,
    Ixc,
    SqGenRef,
    Struct,
    TAdjS,
    TAdjT,
    TBraidDisk,
    TBraidSq,
    TCoassoc,
    TCocom,
    TConn,
    TCounitor,
    TDelDisk,
    TDelSq,
    TDupDisk,
    TDupSq,
    TSyl,
    TYB,
    VId,
    VSeq,
    Whisk,
    boundary3,
    hcomp,
    vcomp,
)
from .normalize import (
    braid_disk_of_arrow,
    conn_of_arrow,
    del_disk_of_arrow,
    dup_disk_of_arrow,
    normalize_strict,
)


def _need(sig, flag, what):
    if not getattr(sig.flags, flag):
        raise StructureUnavailable(f"{what} needs the {flag} flag")


def _e(sig, obj=None):
    from .signature import BASE

    return Path(obj or BASE, obj or BASE, ())


# ---------------------------------------------------------------------------
# braiding
# ---------------------------------------------------------------------------


def braid_object(sig, u, w):
    """sigma<u, w> as an arrow (expanded to generator braidings)."""
    return braid_arrow(sig, tuple(u), tuple(w))


def braid_square(sig, m, x, right=False):
    """sigma<m, x> (or sigma<x, m>): the proarrow-component square."""
    _need(sig, "braided", "braiding")
    if isinstance(m, str):
        m = atom_pro(sig, HGen(m))
    m = expand_pro(sig, m)
    x = tuple(x)
    if m.is_identity:
        a = braid_object(sig, m.src.word, x) if not right else braid_object(sig, x, m.src.word)
        return HId(a)
    if len(m.atoms) > 1:
        f = mk_pro(sig, m.atoms[:1])
        g = mk_pro(sig, m.atoms[1:])
        # transformation components preserve proarrow composition
        return hcomp(braid_square(sig, f, x, right), braid_square(sig, g, x, right))
    at = m.atoms[0]
    if not at.left.word and not at.right.word:
        return Struct(TBraidSq(at.core, x, right))
    e = _e(sig, at.left.src)
    if at.left.word:
        z = at.left.word[:1]
        pz = path(sig, z)
        inner = mk_pro(sig, [HAtom(path(sig, at.left.word[1:]) if at.left.word[1:] else e, at.core, at.right)])
        sub = braid_square(sig, inner, x, right)
        if not right:
            # sigma<z (x) M, x> = (z (x) sigma<M,x>) ; <<sigma<z,x>, M>>
            return vcomp(
                Whisk(pz, sub, e),
                Ixc("vh", braid_object(sig, z, x), e, inner),
            )
        # sigma<x, z (x) M> = <<sigma<x,z>, M>> ; (z (x) sigma<x,M>)
        return vcomp(
            Ixc("vh", braid_object(sig, x, z), e, inner),
            Whisk(pz, sub, e),
        )
    z = at.right.word[-1:]
    pz = path(sig, z)
    inner = mk_pro(
        sig,
        [HAtom(at.left, at.core, path(sig, at.right.word[:-1]) if at.right.word[:-1] else e)],
    )
    sub = braid_square(sig, inner, x, right)
    if not right:
        # sigma<M (x) z, x> = <<M, sigma<z,x>>> ; (sigma<M,x> (x) z)
        return vcomp(
            Ixc("hv", inner, e, braid_object(sig, z, x)),
            Whisk(e, sub, pz),
        )
    # sigma<x, M (x) z> = (sigma<x,M> (x) z) ; <<M, sigma<x,z>>>
    return vcomp(
        Whisk(e, sub, pz),
        Ixc("hv", inner, e, braid_object(sig, x, z)),
    )


def braid_disk(sig, a, x, right=False):
    """sigma<a, x> (or sigma<x, a>): the arrow-component disk."""
    _need(sig, "braided", "braiding")
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return normalize_strict(sig, braid_disk_of_arrow(sig, a, tuple(x), right))


def yang_baxterator(sig, a, b, c):
    _need(sig, "braided", "the Yang-Baxterator")
    return Struct(TYB(a, b, c))


# ---------------------------------------------------------------------------
# syllepsis and symmetry
# ---------------------------------------------------------------------------


def syllepsis_cell(sig, u, w):
    _need(sig, "sylleptic", "syllepsis")
    u = (u,) if isinstance(u, str) else tuple(u)
    w = (w,) if isinstance(w, str) else tuple(w)
    return Struct(TSyl(u, w))


def symmetry_pack(sig, a, b):
    """The adjoint equivalence <sigma<a,b>, sigma<b,a>> with unit nu<a,b>
    and counit Inv(nu<b,a>), and its two triangle laws."""
    _need(sig, "symmetric", "symmetry")
    s_ab = braid_object(sig, (a,), (b,))
    s_ba = braid_object(sig, (b,), (a,))
    unit = syllepsis_cell(sig, a, b)
    counit = Inv(syllepsis_cell(sig, b, a))
    tri1_lhs = hcomp(vcomp(unit, HId(s_ab)), vcomp(HId(s_ab), counit))
    tri1_rhs = HId(s_ab)
    tri2_lhs = hcomp(vcomp(HId(s_ba), unit), vcomp(counit, HId(s_ba)))
    tri2_rhs = HId(s_ba)
    return {
        "unit": unit,
        "counit": counit,
        "triangles": ((tri1_lhs, tri1_rhs), (tri2_lhs, tri2_rhs)),
    }


def symmetry_law(sig, a, b):
    """Both sides of the classical symmetry equation for a syllepsis."""
    _need(sig, "sylleptic", "the symmetry law")
    s_ab = braid_object(sig, (a,), (b,))
    nu_ab = syllepsis_cell(sig, a, b)
    nu_ba = syllepsis_cell(sig, b, a)
    lhs = vcomp(nu_ab, HId(s_ab))
    rhs = vcomp(HId(s_ab), nu_ba)
    return lhs, rhs


# ---------------------------------------------------------------------------
# cartesian structure
# ---------------------------------------------------------------------------


def dup_object(sig, w, primed=False):
    return dup_arrow(sig, (w,) if isinstance(w, str) else tuple(w), primed)


def del_object(sig, w):
    return del_arrow(sig, (w,) if isinstance(w, str) else tuple(w))


def dup_square(sig, m, primed=False):
    """delta(m) (or delta'(m)) proarrow-component square."""
    _need(sig, "duplication", "duplicators")
    if isinstance(m, str):
        m = atom_pro(sig, HGen(m))
    m = expand_pro(sig, m)
    if m.is_identity:
        return HId(dup_object(sig, m.src.word, primed) if m.src.word else arrow_id(m.src))
    if len(m.atoms) == 1 and not m.atoms[0].left.word and not m.atoms[0].right.word:
        return Struct(TDupSq(m.atoms[0].core, primed))
    if len(m.atoms) > 1:
        f = mk_pro(sig, m.atoms[:1])
        g = mk_pro(sig, m.atoms[1:])
        return vcomp(
            hcomp(dup_square(sig, f, primed), dup_square(sig, g, primed)),
            diag_comparitor_pro(sig, f, g, primed),
        )
    raise StructureUnavailable(
        "duplicator squares at whiskered proarrows are outside the stored strict fragment"
    )


def dup_disk(sig, a, primed=False):
    _need(sig, "duplication", "duplicators")
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return dup_disk_of_arrow(sig, a, primed)


def del_square(sig, m):
    _need(sig, "deletion", "deletors")
    if isinstance(m, str):
        m = atom_pro(sig, HGen(m))
    m = expand_pro(sig, m)
    if m.is_identity:
        return HId(del_object(sig, m.src.word) if m.src.word else arrow_id(m.src))
    if len(m.atoms) == 1 and not m.atoms[0].left.word and not m.atoms[0].right.word:
        return Struct(TDelSq(m.atoms[0].core))
    if len(m.atoms) > 1:
        f = mk_pro(sig, m.atoms[:1])
        g = mk_pro(sig, m.atoms[1:])
        # eps(M (.) N) = eps M (.) eps N
        return hcomp(del_square(sig, f), del_square(sig, g))
    raise StructureUnavailable(
        "deletor squares at whiskered proarrows are outside the stored strict fragment"
    )


def del_disk(sig, a):
    _need(sig, "deletion", "deletors")
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return del_disk_of_arrow(sig, a)


def coassociator(sig, a, primed=False):
    _need(sig, "duplication", "coassociators")
    return Struct(TCoassoc(a, primed))


def cocommutor(sig, a, primed=False):
    _need(sig, "duplication", "cocommutors")
    return Struct(TCocom(a, primed))


def counitor(sig, a, side, primed=False):
    _need(sig, "deletion", "counitors")
    if side not in ("l", "r"):
        raise IllTyped("counitor side must be 'l' or 'r'")
    return Struct(TCounitor(a, side, primed))


# ---------------------------------------------------------------------------
# companions and conjoints
# ---------------------------------------------------------------------------


def companion(sig, a):
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return companion_pro(sig, expand_arrow(sig, a))


def conjoint(sig, a):
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return conjoint_pro(sig, expand_arrow(sig, a))


def connection(sig, a, kind):
    """cod/dom (companion) or sec/ret (conjoint) connection square."""
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    return conn_of_arrow(sig, a, kind)


def companion_unit(sig, a):
    """unit pro-id => f^ (.) f~  of the companion|conjoint adjunction."""
    return hcomp(connection(sig, a, "cod"), connection(sig, a, "ret"))


def companion_counit(sig, a):
    return hcomp(connection(sig, a, "sec"), connection(sig, a, "dom"))


def companion_triangles(sig, a):
    if isinstance(a, str):
        a = atom_arrow(sig, VGen(a))
    fhat = companion(sig, a)
    fchk = conjoint(sig, a)
    u = companion_unit(sig, a)
    c = companion_counit(sig, a)
    tri1 = (
        vcomp(hcomp(u, VId(fhat)), hcomp(VId(fhat), c)),
        VId(fhat),
    )
    tri2 = (
        vcomp(hcomp(VId(fchk), u), hcomp(c, VId(fchk))),
        VId(fchk),
    )
    return tri1, tri2


# -- local terminal objects and binary products -----------------------------


def local_top(sig, src_obj, tgt_obj):
    """T : A -|-> B, the local terminal proarrow eps^ A (.) eps~ B."""
    _need(sig, "deletion", "the local terminal object")
    a = atom_pro(sig, CompanionH(DelA((src_obj,))))
    b = atom_pro(sig, ConjointH(DelA((tgt_obj,))))
    return compose_pros(a, b)


def local_bang(sig, p):
    """<>P : P => T."""
    _need(sig, "deletion", "the local terminal object")
    if isinstance(p, str):
        p = atom_pro(sig, HGen(p))
    a = p.src.word[0] if len(p.src.word) == 1 else None
    b = p.tgt.word[0] if len(p.tgt.word) == 1 else None
    if a is None or b is None:
        raise IllTyped("local terminal cells need single-generator endpoints")
    return hcomp(
        connection(sig, atom_arrow(sig, DelA((a,))), "cod"),
        del_square(sig, p),
        connection(sig, atom_arrow(sig, DelA((b,))), "ret"),
    )


def local_tau0(sig, src_obj, tgt_obj):
    """tau_0 : ⟦eps A, eps B; T, pro-id⟧ (the comparison square)."""
    _need(sig, "deletion", "the local terminal object")
    return hcomp(
        connection(sig, atom_arrow(sig, DelA((src_obj,))), "dom"),
        connection(sig, atom_arrow(sig, DelA((tgt_obj,))), "sec"),
    )


def local_meet(sig, m, n):
    """/\\<M, N> = delta^ A (.) (M (x) N) (.) delta~ B.

    The tensor uses the same interleaving as the duplicator's components:
    the right-wire copy comes first.
    """
    _need(sig, "deletion", "local products")
    m = atom_pro(sig, HGen(m)) if isinstance(m, str) else m
    n = atom_pro(sig, HGen(n)) if isinstance(n, str) else n
    a, b = _local_ends(m, n)
    dm = atom_pro(sig, CompanionH(DupA((a,))))
    dn = atom_pro(sig, ConjointH(DupA((b,))))
    e = _e(sig, m.src.src)
    mxn = compose_pros(whisker_pro(sig, m.src, n, e), whisker_pro(sig, e, m, n.tgt))
    return compose_pros(compose_pros(dm, mxn), dn)


def _local_ends(m, n):
    if len(m.src.word) != 1 or len(m.tgt.word) != 1:
        raise IllTyped("local product cells need single-generator endpoints")
    if m.src != n.src or m.tgt != n.tgt:
        raise IllTyped("local products need parallel proarrows")
    return m.src.word[0], m.tgt.word[0]


def local_diag(sig, p):
    """diag P : P => /\\<P, P>."""
    _need(sig, "deletion", "local products")
    p = atom_pro(sig, HGen(p)) if isinstance(p, str) else p
    a, b = _local_ends(p, p)
    return hcomp(
        connection(sig, atom_arrow(sig, DupA((a,))), "cod"),
        dup_square(sig, p),
        connection(sig, atom_arrow(sig, DupA((b,))), "ret"),
    )


def local_pair_map(sig, alpha, beta, m, n):
    """/\\<alpha, beta> for parallel disks alpha : P => M, beta : P => N."""
    _need(sig, "deletion", "local products")
    a, b = _local_ends(m, n)
    e = _e(sig, m.src.src)
    dm = atom_pro(sig, CompanionH(DupA((a,))))
    dn = atom_pro(sig, ConjointH(DupA((b,))))
    return hcomp(
        VId(dm),
        Whisk(m.src, beta, e),
        Whisk(e, alpha, n.tgt),
        VId(dn),
    )


def local_tuple(sig, alpha, beta, p, m, n):
    """<alpha, beta> = diag P ; /\\<alpha, beta>."""
    return vcomp(local_diag(sig, p), local_pair_map(sig, alpha, beta, m, n))


def local_tau2(sig, m, n):
    """tau_2<M,N> : ⟦delta A, delta B; /\\<M,N>, M (x) N⟧."""
    _need(sig, "deletion", "local products")
    m = atom_pro(sig, HGen(m)) if isinstance(m, str) else m
    n = atom_pro(sig, HGen(n)) if isinstance(n, str) else n
    a, b = _local_ends(m, n)
    e = _e(sig, m.src.src)
    mxn = compose_pros(whisker_pro(sig, m.src, n, e), whisker_pro(sig, e, m, n.tgt))
    return hcomp(
        connection(sig, atom_arrow(sig, DupA((a,))), "dom"),
        VId(mxn),
        connection(sig, atom_arrow(sig, DupA((b,))), "sec"),
    )


# ---------------------------------------------------------------------------
# Gray diagonal functors and swap
# ---------------------------------------------------------------------------


def gray_diagonal(sig, t, primed=False):
    """Image of a cell of dimension <= 3 under the Gray diagonal."""
    if isinstance(t, Path):
        return concat_path(t, t)
    if isinstance(t, Arrow):
        a = expand_arrow(sig, t)
        e = _e(sig, a.src.src)
        if not primed:
            return compose_arrows(
                whisker_arrow(sig, a.src, a, e), whisker_arrow(sig, e, a, a.tgt)
            )
        return compose_arrows(
            whisker_arrow(sig, e, a, a.src), whisker_arrow(sig, a.tgt, a, e)
        )
    if isinstance(t, Proarrow):
        m = expand_pro(sig, t)
        e = _e(sig, m.src.src)
        if not primed:
            return compose_pros(
                whisker_pro(sig, m.src, m, e), whisker_pro(sig, e, m, m.tgt)
            )
        return compose_pros(
            whisker_pro(sig, e, m, m.src), whisker_pro(sig, m.tgt, m, e)
        )
    # a single square
    b = boundary3(sig, t)
    f, g, m, n = b.vsrc, b.vtgt, b.hsrc, b.htgt
    a_path = m.src
    d_path = n.tgt
    e = _e(sig, a_path.src)
    if not primed:
        return vcomp(
            hcomp(Whisk(a_path, t, e), Ixc("hv", m, e, g)),
            hcomp(Ixc("vh", f, e, n), Whisk(e, t, d_path)),
        )
    return vcomp(
        hcomp(Whisk(e, t, a_path), Ixc("vh", g, e, m)),
        hcomp(Ixc("hv", n, e, f), Whisk(d_path, t, e)),
    )


def diag_comparitor_arrow(sig, f, g, primed=False):
    """kappa^<f,g> : Diag f ; Diag g => Diag(f;g), a derived composite."""
    if isinstance(f, str):
        f = atom_arrow(sig, VGen(f))
    if isinstance(g, str):
        g = atom_arrow(sig, VGen(g))
    e = _e(sig, f.src.src)
    if not primed:
        return vcomp(
            HId(whisker_arrow(sig, f.src, f, e)),
            Ixc("vv", f, e, g),
            HId(whisker_arrow(sig, e, g, g.tgt)),
        )
    return vcomp(
        HId(whisker_arrow(sig, e, f, f.src)),
        Inv(Ixc("vv", g, e, f)),
        HId(whisker_arrow(sig, g.tgt, g, e)),
    )


def diag_comparitor_pro(sig, m, n, primed=False):
    """kappa^<M,N> : Diag M (.) Diag N => Diag(M (.) N)."""
    if isinstance(m, str):
        m = atom_pro(sig, HGen(m))
    if isinstance(n, str):
        n = atom_pro(sig, HGen(n))
    e = _e(sig, m.src.src)
    if not primed:
        return hcomp(
            VId(whisker_pro(sig, m.src, m, e)),
            Ixc("hh", m, e, n),
            VId(whisker_pro(sig, e, n, n.tgt)),
        )
    return hcomp(
        VId(whisker_pro(sig, e, m, m.src)),
        Inv(Ixc("hh", n, e, m)),
        VId(whisker_pro(sig, n.tgt, n, e)),
    )


# -- swap -------------------------------------------------------------------


def swap(sig, t, left_gens):
    """Transpose the factors of a Gray-pair term.

    `left_gens` names the generating cells of the left factor; every atom
    and every path letter must belong to one factor.  Heterogeneous
    interchangers swap kinds, homogeneous oplax ones become inverted lax
    ones (represented as Inv of the transposed oplax cell), so applying
    swap twice gives back the term on the nose.
    """
    left = frozenset(left_gens)

    def is_left_word(w):
        return all(x in left for x in w)

    def is_right_word(w):
        return all(x not in left for x in w)

    def sw_path(p):
        k = 0
        while k < len(p.word) and p.word[k] in left:
            k += 1
        lw, rw = p.word[:k], p.word[k:]
        if not is_right_word(rw):
            raise IllTyped(f"path {p.word} is not split by the pair")
        return Path(p.src, p.tgt, rw + lw)

    def core_side(core):
        if isinstance(core, (VGen, HGen)):
            return core.name in left
        raise IllTyped(f"swap only applies to declared-generator atoms, got {core!r}")

    def sw_ctx(lw, rw, side_left):
        """New (left, right) context words for a swapped atom."""
        if side_left:
            # split the right context into own-factor and other-factor parts
            k = 0
            while k < len(rw) and rw[k] in left:
                k += 1
            own_r, other = rw[:k], rw[k:]
            if not (is_left_word(lw) and is_right_word(other)):
                raise IllTyped("atom context is not split by the pair")
            return other + lw, own_r
        k = 0
        while k < len(lw) and lw[k] in left:
            k += 1
        other, own_l = lw[:k], lw[k:]
        if not (is_left_word(other) and is_right_word(own_l) and is_right_word(rw)):
            raise IllTyped("atom context is not split by the pair")
        return own_l, rw + other

    def sw_atom(at, atomcls):
        newl, newr = sw_ctx(at.left.word, at.right.word, core_side(at.core))
        o = at.left.src
        return atomcls(path(sig, newl) if newl else Path(o, o, ()), at.core, path(sig, newr) if newr else Path(o, o, ()))

    def sw_arrow(a):
        return mk_arrow(sig, [sw_atom(x, VAtom) for x in a.atoms], src=sw_path(a.src) if a.is_identity else None)

    def sw_pro(m):
        return mk_pro(sig, [sw_atom(x, HAtom) for x in m.atoms], src=sw_path(m.src) if m.is_identity else None)

    def sw_two(x):
        return sw_arrow(x) if isinstance(x, Arrow) else sw_pro(x)

    def sw3(u):
        if isinstance(u, VId):
            return VId(sw_pro(u.pro))
        if isinstance(u, HId):
            return HId(sw_arrow(u.arr))
        if isinstance(u, VSeq):
            return VSeq(tuple(sw3(i) for i in u.items))
        if isinstance(u, HSeq):
            return HSeq(tuple(sw3(i) for i in u.items))
        if isinstance(u, Inv):
            inner = sw3(u.body)
            return inner.body if isinstance(inner, Inv) else Inv(inner)
        if isinstance(u, Coh):
            return Coh(u.kind, tuple(sw_pro(m) for m in u.args))
        if isinstance(u, Whisk):
            body = u.body
            if isinstance(body, SqGenRef):
                side = body.name in left
                newl, newr = sw_ctx(u.left.word, u.right.word, side)
                o = u.left.src
                return Whisk(
                    path(sig, newl) if newl else Path(o, o, ()),
                    body,
                    path(sig, newr) if newr else Path(o, o, ()),
                )
            if isinstance(body, Ixc) or (isinstance(body, Inv) and isinstance(body.body, Ixc)):
                return sw_ixc(u.left, body, u.right)
            raise IllTyped(f"swap does not apply to whiskered {type(body).__name__}")
        if isinstance(u, SqGenRef):
            return u
        if isinstance(u, Ixc):
            o = u.mid.src
            return sw_ixc(Path(o, o, ()), u, Path(o, o, ()))
        raise IllTyped(f"swap does not apply to {type(u).__name__}")

    def sw_ixc(l, body, r):
        """Whiskered interchanger: the mid splits into factor blocks which
        become the swapped term's outer contexts; the old outer contexts
        become the new mid."""
        invert = isinstance(body, Inv)
        u = body.body if invert else body
        if not (is_left_word(l.word) and is_right_word(r.word)):
            raise IllTyped("interchanger contexts are not split by the pair")
        k = 0
        while k < len(u.mid.word) and u.mid.word[k] in left:
            k += 1
        mid_l, mid_r = u.mid.word[:k], u.mid.word[k:]
        if not is_right_word(mid_r):
            raise IllTyped(f"interchanger middle {u.mid.word} is not split by the pair")
        o = u.mid.src
        kind2 = u.kind[1] + u.kind[0]
        new = Ixc(kind2, u.b, path(sig, r.word + l.word) if (r.word or l.word) else Path(o, o, ()), u.a, u.variance)
        out = Inv(new) if (u.kind in ("vv", "hh")) != invert else new
        wl = path(sig, mid_r) if mid_r else Path(o, o, ())
        wr = path(sig, mid_l) if mid_l else Path(o, o, ())
        if not wl.word and not wr.word:
            return out
        return Whisk(wl, out, wr)

    return sw3(t)
