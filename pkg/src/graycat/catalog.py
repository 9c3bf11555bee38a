"""The relation catalog: every coherence equality as a concrete rule
instance over the signature's generators.

Strict (oriented) equalities live in the normalizer; this module builds
the bidirectional rules for the coherent fragment, each keyed to its
source equation.  Rule construction is self-checking: the database
builder verifies equal boundaries for every instance.
"""

from __future__ import annotations

from itertools import permutations

from .cells import (
    Arrow,
    BraidA,
    CompanionH,
    ConjointH,
    DelA,
    DupA,
    HGen,
    Path,
    VGen,
    arrow_id,
    atom_arrow,
    atom_pro,
    braid_arrow,
    compose_arrows,
    mk_arrow,
    path,
    pro_id,
    whisker_arrow,
)
from .errors import IllTyped, NoMatch
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
    TCoassoc,
    TCocom,
    TConn,
    TCounitor,
    TDelDisk,
    TDupDisk,
    TSyl,
    TYB,
    VId,
    VSeq,
    Whisk,
    boundary3,
    hcomp,
    vcomp,
)
from .normalize import normalize_strict


def _e(sig):
    from .signature import BASE

    return Path(BASE, BASE, ())


def _objs(sig):
    return [g.name for g in sig.gens1]


def _rule(name, key, lhs, rhs, provenance="paper", priority=100):
    from .rewrite import Rule

    return Rule(name, key, "bidirectional", lhs=lhs, rhs=rhs,
                provenance=provenance, priority=priority)


# ---------------------------------------------------------------------------
# embedding disks into larger arrows (the chain solver)
# ---------------------------------------------------------------------------


def match_arrow_mod_whisker(sig, seg, side):
    """(l, r) with whisker(l, side, r) == seg, or None."""
    if seg == side:
        o = side.src.src
        return Path(o, o, ()), Path(side.src.tgt, side.src.tgt, ())
    cw = seg.src.word
    sw = side.src.word
    diff = len(cw) - len(sw)
    if diff < 0 or len(seg.atoms) != len(side.atoms):
        return None
    for k in range(diff + 1):
        lw, rw = cw[:k], cw[k + len(sw):]
        if cw[k : k + len(sw)] != sw:
            continue
        try:
            l = path(sig, lw) if lw else Path(seg.src.src, seg.src.src, ())
            r = path(sig, rw) if rw else Path(seg.src.tgt, seg.src.tgt, ())
            if l.tgt != side.src.src or side.src.tgt != r.src:
                continue
            cand = whisker_arrow(sig, l, side, r)
        except Exception:
            continue
        if cand == seg:
            return l, r
    return None


def find_disk_applications(sig, whole, disk):
    """All (i, j, l, r) where the disk's source arrow occurs as a whiskered
    segment whole[i:j]."""
    b = boundary3(sig, disk)
    u = b.vsrc
    out = []
    n = len(whole.atoms)
    for i in range(n + 1):
        for j in range(i, n + 1):
            if j == i and u.atoms:
                continue
            seg = _slice_arrow(sig, whole, i, j)
            if seg is None:
                continue
            m = match_arrow_mod_whisker(sig, seg, u)
            if m is not None:
                out.append((i, j, m[0], m[1]))
    return out


def _slice_arrow(sig, whole, i, j):
    atoms = whole.atoms[i:j]
    if not atoms:
        return None
    try:
        return mk_arrow(sig, atoms)
    except Exception:
        return None


def embed_disk(sig, whole, i, j, l, r, disk):
    """The step 3-cell rewriting whole[i:j] by the (whiskered) disk."""
    b = boundary3(sig, disk)
    pre = whole.atoms[:i]
    post = whole.atoms[j:]
    mid = disk if (not l.word and not r.word) else Whisk(l, disk, r)
    items = []
    if pre:
        items.append(HId(mk_arrow(sig, pre)))
    items.append(mid)
    if post:
        items.append(HId(mk_arrow(sig, post)))
    step = vcomp(*items)
    tgt = Arrow(
        whole.src,
        whole.tgt,
        pre + tuple(whisker_arrow(sig, l, b.vtgt, r).atoms) + post,
    )
    return step, tgt


def solve_chain(sig, start, cells, end=None):
    """Compose disk rewrites along an arrow, each applied at its unique
    position; returns (HSeq term, final arrow)."""
    cur = normalize_strict(sig, start)
    steps = []
    for disk in cells:
        disk = normalize_strict(sig, disk)
        apps = find_disk_applications(sig, cur, disk)
        if not apps:
            raise NoMatch(f"chain step {disk!r} does not apply to {cur!r}")
        i, j, l, r = apps[0]
        step, cur = embed_disk(sig, cur, i, j, l, r, disk)
        cur = normalize_strict(sig, cur)
        steps.append(step)
    if end is not None and cur != normalize_strict(sig, end):
        raise NoMatch("chain does not reach the stated end")
    return hcomp(*steps), cur


# ---------------------------------------------------------------------------
# rule builders
# ---------------------------------------------------------------------------


def equation_rules(sig):
    rules = []
    f = sig.flags
    rules.extend(_interchanger_naturality_rules(sig))
    if f.braided:
        rules.extend(_braid_naturality_rules(sig))
        rules.extend(_quaternary_rules(sig))
    if f.sylleptic:
        rules.extend(_yb_syllepsis_rules(sig))
        rules.extend(_syl_naturality_rules(sig))
    if f.symmetric:
        rules.extend(_symmetry_rules(sig))
    if f.duplication:
        rules.extend(_duplication_rules(sig))
    if f.deletion:
        rules.extend(_deletion_rules(sig))
    for name in sorted(f.companionable):
        rules.extend(_companion_weak_rules(sig, name))
    for name in sorted(f.conjoinable):
        rules.extend(_conjoint_weak_rules(sig, name))
    for pair in f.oplax_adjunctions:
        rules.extend(_zigzag_rules(sig, *pair))
    return rules


def _sq_boundary_cells(sig, name):
    b = boundary3(sig, SqGenRef(name))
    return b.vsrc, b.vtgt, b.hsrc, b.htgt


def _interchanger_naturality_rules(sig):
    """Naturality of interchangers in the first and last index, per square
    generator and transverse 2-cell generator."""
    rules = []
    e = _e(sig)
    for sq in sig.gensSq:
        fv, gv, m, n = _sq_boundary_cells(sig, sq.name)
        phi = SqGenRef(sq.name)
        for h in sig.gensH:
            delta = atom_pro(sig, HGen(h.name))
            lhs = vcomp(
                hcomp(Whisk(e, phi, delta.src), Ixc("vh", gv, e, delta)),
                Ixc("hh", n, e, delta),
            )
            rhs = vcomp(
                Ixc("hh", m, e, delta),
                hcomp(Ixc("vh", fv, e, delta), Whisk(e, phi, delta.tgt)),
            )
            rules.append(
                _rule(f"ixc-nat-first-h[{sq.name};{h.name}]",
                      "interchanger naturality in first index", lhs, rhs)
            )
            lhs2 = vcomp(
                Ixc("hh", delta, e, m),
                hcomp(Whisk(delta.src, phi, e), Ixc("hv", delta, e, gv)),
            )
            rhs2 = vcomp(
                hcomp(Ixc("hv", delta, e, fv), Whisk(delta.tgt, phi, e)),
                Ixc("hh", delta, e, n),
            )
            rules.append(
                _rule(f"ixc-nat-last-h[{h.name};{sq.name}]",
                      "interchanger naturality in last index", lhs2, rhs2)
            )
        for v in sig.gensV:
            beta = atom_arrow(sig, VGen(v.name))
            lhs = hcomp(
                vcomp(Whisk(e, phi, beta.src), Ixc("hv", n, e, beta)),
                Ixc("vv", gv, e, beta),
            )
            rhs = hcomp(
                Ixc("vv", fv, e, beta),
                vcomp(Ixc("hv", m, e, beta), Whisk(e, phi, beta.tgt)),
            )
            rules.append(
                _rule(f"ixc-nat-first-v[{sq.name};{v.name}]",
                      "interchanger naturality in first index", lhs, rhs)
            )
            lhs2 = hcomp(
                Ixc("vv", beta, e, fv),
                vcomp(Whisk(beta.src, phi, e), Ixc("vh", beta, e, n)),
            )
            rhs2 = hcomp(
                vcomp(Ixc("vh", beta, e, m), Whisk(beta.tgt, phi, e)),
                Ixc("vv", beta, e, gv),
            )
            rules.append(
                _rule(f"ixc-nat-last-v[{v.name};{sq.name}]",
                      "interchanger naturality in last index", lhs2, rhs2)
            )
    return rules


def _structural_disks(sig):
    """Named invertible structural disks for naturality instances."""
    out = []
    f = sig.flags
    objs = _objs(sig)
    if f.sylleptic:
        for a in objs:
            for b in objs:
                out.append((f"nu[{a},{b}]", Struct(TSyl((a,), (b,)))))
    if f.duplication:
        for a in objs:
            out.append((f"s[{a}]", Struct(TCoassoc(a, False))))
            out.append((f"s'[{a}]", Struct(TCoassoc(a, True))))
            out.append((f"c[{a}]", Struct(TCocom(a, False))))
            out.append((f"c'[{a}]", Struct(TCocom(a, True))))
    if f.deletion:
        for a in objs:
            for side in ("l", "r"):
                out.append((f"{side}[{a}]", Struct(TCounitor(a, side, False))))
                out.append((f"{side}'[{a}]", Struct(TCounitor(a, side, True))))
    return out


def _braid_naturality_rules(sig):
    """Braiding naturality for (2,0)- and (0,2)-type squares, instantiated
    at square generators and at the structural modification disks."""
    from .structures import braid_disk, braid_square

    rules = []
    e = _e(sig)
    phis = [(f"sq[{sq.name}]", SqGenRef(sq.name)) for sq in sig.gensSq]
    phis += _structural_disks(sig)
    for label, phi in phis:
        b = boundary3(sig, phi)
        for x in _objs(sig):
            px = path(sig, (x,))
            try:
                lhs = hcomp(
                    vcomp(Whisk(e, phi, px), braid_square(sig, b.htgt, (x,))),
                    braid_disk(sig, b.vtgt, (x,)),
                )
                rhs = hcomp(
                    braid_disk(sig, b.vsrc, (x,)),
                    vcomp(braid_square(sig, b.hsrc, (x,)), Whisk(px, phi, e)),
                )
                rules.append(
                    _rule(f"braid-nat-20[{label};{x}]",
                          "braiding naturality for squares (2,0)", lhs, rhs)
                )
                lhs2 = hcomp(
                    vcomp(Whisk(px, phi, e), braid_square(sig, b.htgt, (x,), right=True)),
                    braid_disk(sig, b.vtgt, (x,), right=True),
                )
                rhs2 = hcomp(
                    braid_disk(sig, b.vsrc, (x,), right=True),
                    vcomp(braid_square(sig, b.hsrc, (x,), right=True), Whisk(e, phi, px)),
                )
                rules.append(
                    _rule(f"braid-nat-02[{label};{x}]",
                          "braiding naturality for squares (0,2)", lhs2, rhs2)
                )
            except IllTyped:
                continue
    return rules


# -- quaternary reversal ------------------------------------------------------

# positions of the fixed six-crossing seed word and its two four-move
# Yang-Baxterator chains (interchanger fillers grouped into the labeled
# factors); found by exhaustive search over reduced words, see the rule's
# paper_key.
_QR_SEED = (0, 1, 2, 1, 0, 1)
_QR_LHS = (
    ("yb", ("a", "c", "d"), 1),
    ("ixc", 0),
    ("ixc", 3),
    ("yb", ("a", "b", "d"), 1),
    ("yb", ("a", "b", "c"), 3),
    ("ixc", 2),
    ("yb", ("b", "c", "d"), 0),
)
_QR_RHS = (
    ("yb", ("b", "c", "d"), 3),
    ("ixc", 2),
    ("yb", ("a", "b", "c"), 0),
    ("yb", ("a", "b", "d"), 2),
    ("ixc", 1),
    ("ixc", 4),
    ("yb", ("a", "c", "d"), 2),
)


def _word_from_positions(sig, letters, positions):
    """Arrow for a sequence of adjacent-crossing positions on four wires."""
    wires = list(letters)
    atoms = []
    for p in positions:
        l = tuple(wires[:p])
        u, w = wires[p], wires[p + 1]
        r = tuple(wires[p + 2 :])
        o = _e(sig).src
        atoms.append(
            whisker_arrow(
                sig,
                path(sig, l) if l else _e(sig),
                atom_arrow(sig, BraidA((u,), (w,))),
                path(sig, r) if r else _e(sig),
            ).atoms[0]
        )
        wires[p], wires[p + 1] = wires[p + 1], wires[p]
    return mk_arrow(sig, atoms)


def _quaternary_chain(sig, letters, seed, movelist):
    assign = dict(zip(("a", "b", "c", "d"), letters))
    cur = _word_from_positions(sig, letters, seed)
    factors = []
    pending = []
    for move in movelist:
        if move[0] == "ixc":
            pending.append(move[1])
            continue
        _, tri, at = move
        a, b, c = (assign[k] for k in tri)
        # fillers first, then the labeled YB step, grouped into one factor
        parts = []
        for idx in pending:
            step, cur = _ixc_swap_step(sig, cur, idx)
            parts.append(step)
        pending = []
        yb_fwd = Struct(TYB(a, b, c))
        apps = find_disk_applications(sig, cur, yb_fwd)
        disk = yb_fwd
        if not apps:
            disk = Inv(yb_fwd)
            apps = find_disk_applications(sig, cur, disk)
        if not apps:
            raise NoMatch(f"Yang-Baxterator {tri} does not apply in the stored chain")
        i, j, l, r = apps[0]
        step, cur = embed_disk(sig, cur, i, j, l, r, disk)
        parts.append(step)
        factors.append(hcomp(*parts))
    if pending:
        raise NoMatch("stored chain ends with unlabeled fillers")
    return hcomp(*factors), cur


def _ixc_swap_step(sig, whole, i):
    """Interchange the adjacent atoms i, i+1 (disjoint supports)."""
    x, y = whole.atoms[i], whole.atoms[i + 1]
    seg = mk_arrow(sig, (x, y))
    # build the interchanger of the two cores and pick the orientation
    # whose source matches the segment
    from .cells import vcore_bounds

    def bare(at):
        s, t = vcore_bounds(sig, at.core)
        o = s.src
        return mk_arrow(sig, [type(at)(Path(o, o, ()), at.core, Path(o, o, ()))])

    if len(x.left.word) < len(y.left.word):
        first_at, second_at = x, y
    else:
        first_at, second_at = y, x
    fa = bare(first_at)
    sa = bare(second_at)
    # infer contexts from the segment: outer left = first core's left,
    # outer right = second core's right, middle = the letters between
    outl = first_at.left
    outr = second_at.right
    seg_src = seg.src.word
    mstart = len(outl.word) + len(fa.src.word)
    mstop = len(seg_src) - len(outr.word) - len(sa.src.word)
    midw = seg_src[mstart:mstop]
    o = outl.src
    mid = path(sig, midw) if midw else Path(o, o, ())
    cand = Ixc("vv", fa, mid, sa)
    b = boundary3(sig, cand)
    tgt_plain = whisker_arrow(sig, outl, b.vtgt, outr)
    src_plain = whisker_arrow(sig, outl, b.vsrc, outr)
    if src_plain == seg:
        disk = cand
        newseg = tgt_plain
    elif tgt_plain == seg:
        disk = Inv(cand)
        newseg = src_plain
    else:
        raise NoMatch("adjacent atoms are not interchangeable here")
    step = vcomp(
        *([HId(mk_arrow(sig, whole.atoms[:i]))] if i else []),
        (Whisk(outl, disk, outr) if (outl.word or outr.word) else disk),
        *([HId(mk_arrow(sig, whole.atoms[i + 2 :]))] if i + 2 < len(whole.atoms) else []),
    )
    new = Arrow(whole.src, whole.tgt, whole.atoms[:i] + newseg.atoms + whole.atoms[i + 2 :])
    return step, new


def _quaternary_rules(sig):
    # one stored interleaving per 4-subset, letters in declaration order
    from itertools import combinations

    rules = []
    objs = _objs(sig)
    for letters in combinations(objs, 4):
        try:
            lhs, end1 = _quaternary_chain(sig, letters, _QR_SEED, _QR_LHS)
            rhs, end2 = _quaternary_chain(sig, letters, _QR_SEED, _QR_RHS)
        except (NoMatch, IllTyped):
            continue
        if end1 != end2:
            continue
        name = "quaternary-reversal[" + ",".join(letters) + "]"
        rules.append(
            _rule(name, "quaternary reversal braiding coherence", lhs, rhs)
        )
    return rules


def _yb_syllepsis_rules(sig):
    rules = []
    e = _e(sig)
    objs = _objs(sig)
    for a in objs:
        for b in objs:
            for c in objs:
                pa, pb, pc = (path(sig, (x,)) for x in (a, b, c))
                arrow1 = compose_arrows(
                    whisker_arrow(sig, pa, braid_arrow(sig, (b,), (c,)), e),
                    whisker_arrow(sig, e, braid_arrow(sig, (a,), (c,)), pb),
                )
                sab = braid_arrow(sig, (a,), (b,))
                sba = braid_arrow(sig, (b,), (a,))
                step1 = vcomp(Whisk(e, Struct(TSyl((a,), (b,))), pc), HId(arrow1))
                step2 = vcomp(HId(whisker_arrow(sig, e, sab, pc)), Struct(TYB(b, a, c)))
                step3 = vcomp(Struct(TYB(a, b, c)), HId(whisker_arrow(sig, pc, sba, e)))
                step4 = vcomp(HId(arrow1), Whisk(pc, Inv(Struct(TSyl((a,), (b,)))), e))
                lhs = hcomp(step1, step2, step3, step4)
                rhs = HId(arrow1)
                rules.append(
                    _rule(f"yb-syllepsis[{a},{b},{c}]",
                          "yang-baxterator syllepsis coherence", lhs, rhs)
                )
    return rules


def _syl_naturality_rules(sig):
    """Syllepsis modification naturality for generator arrows: painting an
    arrow across the syllepsis."""
    rules = []
    e = _e(sig)
    for v in sig.gensV:
        fa = atom_arrow(sig, VGen(v.name))
        p, q = fa.src, fa.tgt
        for x in _objs(sig):
            px = path(sig, (x,))
            nu_p = Struct(TSyl(tuple(p.word), (x,))) if p.word else None
            nu_q = Struct(TSyl(tuple(q.word), (x,))) if q.word else None
            if nu_p is None or nu_q is None:
                continue
            fx = whisker_arrow(sig, e, fa, px)
            sqx = braid_arrow(sig, tuple(q.word), (x,))
            sxq = braid_arrow(sig, (x,), tuple(q.word))
            # tau<f,x> : (f(x)x);sigma<q,x>;sigma<x,q>  =>  nu-target;(f(x)x)
            tau = hcomp(
                vcomp(Struct(TBraidDisk(VGen(v.name), (x,), False)), HId(sxq)),
                vcomp(HId(braid_arrow(sig, tuple(p.word), (x,))),
                      Struct(TBraidDisk(VGen(v.name), (x,), True))),
            )
            lhs = vcomp(nu_p, HId(fx))
            rhs = hcomp(vcomp(HId(fx), nu_q), tau)
            try:
                rules.append(
                    _rule(f"syl-nat[{v.name};{x}]",
                          "arrow disk modification naturality for arrows",
                          lhs, rhs, provenance="adopted-standard")
                )
            except IllTyped:
                continue
    return rules


def _symmetry_rules(sig):
    from .structures import symmetry_law, symmetry_pack

    rules = []
    objs = _objs(sig)
    for a in objs:
        for b in objs:
            lhs, rhs = symmetry_law(sig, a, b)
            rules.append(_rule(f"syl-symmetry-law[{a},{b}]", "syllepsis symmetry law", lhs, rhs))
            pack = symmetry_pack(sig, a, b)
            (t1l, t1r), (t2l, t2r) = pack["triangles"]
            rules.append(_rule(f"sym-triangle-1[{a},{b}]", "symmetry adjoint equivalence", t1l, t1r))
            rules.append(_rule(f"sym-triangle-2[{a},{b}]", "symmetry adjoint equivalence", t2l, t2r))
    return rules


def _duplication_rules(sig):
    rules = []
    e = _e(sig)
    for a in _objs(sig):
        pa = path(sig, (a,))
        d = atom_arrow(sig, DupA((a,)))
        d2 = atom_arrow(sig, DupA((a,), True))
        sA = Struct(TCoassoc(a, False))
        sA2 = Struct(TCoassoc(a, True))
        cA = Struct(TCocom(a, False))
        cA2 = Struct(TCocom(a, True))
        saa = braid_arrow(sig, (a,), (a,))
        # homogeneous coassociator hexagon
        lhs = hcomp(
            vcomp(HId(d), Whisk(e, sA, pa)),
            vcomp(sA, HId(whisker_arrow(sig, pa, d, pa))),
            vcomp(HId(d), Whisk(pa, sA, e)),
        )
        rhs = hcomp(
            vcomp(sA, HId(whisker_arrow(sig, e, d, path(sig, (a, a))))),
            vcomp(HId(d), Inv(Ixc("vv", d, e, d))),
            vcomp(sA, HId(whisker_arrow(sig, path(sig, (a, a)), d, e))),
        )
        rules.append(
            _rule(f"coassoc-hexagon[{a}]",
                  "duplication homogeneous coassociator coherence", lhs, rhs)
        )
        lhs2 = hcomp(
            vcomp(HId(d2), Whisk(e, sA2, pa)),
            vcomp(sA2, HId(whisker_arrow(sig, pa, d2, pa))),
            vcomp(HId(d2), Whisk(pa, sA2, e)),
        )
        rhs2 = hcomp(
            vcomp(sA2, HId(whisker_arrow(sig, e, d2, path(sig, (a, a))))),
            vcomp(HId(d2), Inv(Ixc("vv", d2, e, d2))),
            vcomp(sA2, HId(whisker_arrow(sig, path(sig, (a, a)), d2, e))),
        )
        rules.append(
            _rule(f"coassoc-hexagon'[{a}]",
                  "duplication homogeneous coassociator coherence", lhs2, rhs2)
        )
        # cocommutor-syllepsis (and dual)
        lhs = Struct(TCocom(a, False))
        rhs = hcomp(
            vcomp(HId(d), Struct(TSyl((a,), (a,)))),
            vcomp(Inv(cA2), HId(saa)),
        )
        rules.append(
            _rule(f"cocom-syllepsis[{a}]",
                  "duplication cocommutor syllepsis coherence", lhs, rhs)
        )
        rhs2 = hcomp(
            vcomp(HId(d2), Struct(TSyl((a,), (a,)))),
            vcomp(Inv(cA), HId(saa)),
        )
        rules.append(
            _rule(f"cocom-syllepsis'[{a}]",
                  "duplication cocommutor syllepsis coherence", cA2, rhs2)
        )
        # coassociator-cocommutor factorization (and dual), via the solver
        try:
            chain, _ = solve_chain(
                sig,
                compose_arrows(d, whisker_arrow(sig, e, d, pa)),
                [
                    cA,
                    Inv(Struct(TBraidDisk(DupA((a,)), (a,), True))),
                    cA,
                    Inv(sA2),
                    Struct(TBraidDisk(DupA((a,), True), (a,), False)),
                    Inv(cA),
                    Inv(cA),
                ],
                end=compose_arrows(d, whisker_arrow(sig, pa, d, e)),
            )
            rules.append(
                _rule(f"coassoc-cocom[{a}]",
                      "duplication coassociator cocommutor coherence", sA, chain)
            )
        except (NoMatch, IllTyped):
            pass
        try:
            chain2, _ = solve_chain(
                sig,
                compose_arrows(d2, whisker_arrow(sig, e, d2, pa)),
                [
                    cA2,
                    Inv(Struct(TBraidDisk(DupA((a,), True), (a,), True))),
                    cA2,
                    Inv(sA),
                    Struct(TBraidDisk(DupA((a,)), (a,), False)),
                    Inv(cA2),
                    Inv(cA2),
                ],
                end=compose_arrows(d2, whisker_arrow(sig, pa, d2, e)),
            )
            rules.append(
                _rule(f"coassoc-cocom'[{a}]",
                      "duplication coassociator cocommutor coherence", sA2, chain2)
            )
        except (NoMatch, IllTyped):
            pass
    return rules


def _deletion_rules(sig):
    rules = []
    e = _e(sig)
    for a in _objs(sig):
        pa = path(sig, (a,))
        d = atom_arrow(sig, DupA((a,)))
        d2 = atom_arrow(sig, DupA((a,), True))
        eps = atom_arrow(sig, DelA((a,)))
        sA = Struct(TCoassoc(a, False))
        lA = Struct(TCounitor(a, "l", False))
        rA = Struct(TCounitor(a, "r", False))
        lA2 = Struct(TCounitor(a, "l", True))
        rA2 = Struct(TCounitor(a, "r", True))
        cA = Struct(TCocom(a, False))
        cA2 = Struct(TCocom(a, True))
        kill_l = whisker_arrow(sig, e, eps, pa)
        t1 = compose_arrows(
            compose_arrows(d, whisker_arrow(sig, e, d, pa)),
            whisker_arrow(sig, pa, eps, pa),
        )
        # counitor-coassociator triangle
        lhs = hcomp(
            vcomp(sA, HId(whisker_arrow(sig, pa, eps, pa))),
            vcomp(HId(d), Whisk(pa, lA, e)),
            vcomp(HId(d), Whisk(e, Inv(rA), pa)),
        )
        rules.append(
            _rule(f"counitor-triangle[{a}]", "counitor coassociator coherence",
                  lhs, HId(t1))
        )
        # counitor-cocommutor factorizations
        lhs_l = Struct(TCounitor(a, "l", False))
        rhs_l = hcomp(
            vcomp(cA, HId(kill_l)),
            vcomp(HId(d2), Inv(Struct(TBraidDisk(DelA((a,)), (a,), True)))),
            rA2,
        )
        rules.append(
            _rule(f"counitor-cocom-l[{a}]",
                  "duplication counitor cocommutor coherence", lhs_l, rhs_l)
        )
        rhs_l2 = hcomp(
            vcomp(cA2, HId(kill_l)),
            vcomp(HId(d), Inv(Struct(TBraidDisk(DelA((a,)), (a,), True)))),
            rA,
        )
        rules.append(
            _rule(f"counitor-cocom-l'[{a}]",
                  "duplication counitor cocommutor coherence", lA2, rhs_l2)
        )
    return rules


def _companion_weak_rules(sig, name):
    core = VGen(name)
    fhat = atom_pro(sig, CompanionH(core))
    lhs = hcomp(Struct(TConn(core, "cod")), Struct(TConn(core, "dom")))
    rhs = vcomp(Coh("lam", (fhat,)), Inv(Coh("rho", (fhat,))))
    return [_rule(f"companion-weak[{name}]", "companion laws", lhs, rhs)]


def _conjoint_weak_rules(sig, name):
    core = VGen(name)
    fchk = atom_pro(sig, ConjointH(core))
    lhs = hcomp(Struct(TConn(core, "sec")), Struct(TConn(core, "ret")))
    rhs = vcomp(Coh("rho", (fchk,)), Inv(Coh("lam", (fchk,))))
    return [_rule(f"conjoint-weak[{name}]", "conjoint laws", lhs, rhs)]


def _zigzag_rules(sig, f, g):
    from .cells import AdjEta, AdjEps

    e = _e(sig)
    pf = path(sig, (f,))
    pg = path(sig, (g,))
    pfg = path(sig, (f, g))
    eta = atom_arrow(sig, AdjEta(f, g))
    eps = atom_arrow(sig, AdjEps(f, g))
    s = Struct(TAdjS(f, g))
    t = Struct(TAdjT(f, g))
    f1 = vcomp(HId(eta), Whisk(pf, s, e))
    f2 = vcomp(Ixc("vv", eta, e, eta), HId(whisker_arrow(sig, pf, eps, pg)))
    f3 = vcomp(HId(eta), Whisk(e, t, pg))
    law1 = _rule(f"zigzag-eta[{f},{g}]", "lax adjunction laws",
                 hcomp(f1, f2, f3), HId(eta))
    g1 = vcomp(Whisk(e, s, pf), HId(eps))
    g2 = vcomp(HId(whisker_arrow(sig, pg, eta, pf)), Ixc("vv", eps, e, eps))
    g3 = vcomp(Whisk(pg, t, e), HId(eps))
    law2 = _rule(f"zigzag-eps[{f},{g}]", "lax adjunction laws",
                 hcomp(g1, g2, g3), HId(eps))
    return [law1, law2]


def invertible_candidates(sig):
    """Atomic invertible cells proposed by inverse introduction."""
    out = []
    f = sig.flags
    for label, cell in _structural_disks(sig):
        out.append(cell)
    if f.braided:
        objs = _objs(sig)
        for a in objs:
            for b in objs:
                for c in objs:
                    out.append(Struct(TYB(a, b, c)))
    for name in sorted(f.companionable):
        fhat = atom_pro(sig, CompanionH(VGen(name)))
        out.append(Coh("lam", (fhat,)))
        out.append(Coh("rho", (fhat,)))
    for name in sorted(f.conjoinable):
        fchk = atom_pro(sig, ConjointH(VGen(name)))
        out.append(Coh("lam", (fchk,)))
        out.append(Coh("rho", (fchk,)))
    normed = []
    for c in out:
        try:
            normed.append(normalize_strict(sig, c))
        except Exception:
            continue
    return normed


def strict_rule_entries():
    """Catalog entries for the oriented strict fragment (normalizer-owned)."""
    entries = [
        ("whisker-nullary", "nullary composite whiskering", "paper"),
        ("whisker-binary", "binary composite whiskering", "paper"),
        ("whisker-two-sided", "two-sided whiskering", "paper"),
        ("whisker-vfunct", "whiskering vertical functoriality", "paper"),
        ("whisker-hfunct", "whiskering horizontal functoriality", "paper"),
        ("whisker-coherators", "whiskering horizontal coherators", "paper"),
        ("ixc-extremal", "interchanger extremal whiskering", "paper"),
        ("ixc-medial", "interchanger medial whiskering", "paper"),
        ("ixc-vh-composite", "vertical-horizontal composite interchangers", "paper"),
        ("ixc-hv-composite", "horizontal-vertical composite interchangers", "paper"),
        ("ixc-vv-composite", "vertical-vertical composite interchangers", "paper"),
        ("ixc-hh-composite", "horizontal-horizontal composite interchangers", "paper"),
        ("vcomp-strict", "middle-four exchange context: strict local composition", "adopted-standard"),
        ("hcomp-unit-strict", "preunitarity", "inline-display"),
        ("coherator-unit-collapse", "preunitarity", "inline-display"),
        ("pair-composite-merge", "pair binary arrow composite", "paper"),
        ("braid-nullary", "nullary tensor braiding", "paper"),
        ("braid-binary", "binary tensor braiding", "paper"),
        ("braid-composite-arrow", "braiding homogeneous composite arrow", "paper"),
        ("braid-21-coherence", "(2,1)-braiding arrow coherence", "paper"),
        ("braid-12-coherence", "(2,1)-braiding proarrow coherence", "paper"),
        ("yb-canonical", "Yang-Baxerator braiding coherence", "paper"),
        ("syl-nullary", "nullary tensor syllepsis", "paper"),
        ("syl-binary", "binary tensor syllepsis", "paper"),
        ("dup-nullary", "nullary tensor duplicator coherence", "paper"),
        ("dup-binary", "binary tensor duplicator coherence", "paper"),
        ("del-nullary", "nullary tensor deletor coherence", "paper"),
        ("del-binary", "binary tensor deletor coherence", "paper"),
        ("dup-comparitor-arrows", "arrow transformation lax binary arrow comparitor compatibility", "paper"),
        ("dup-comparitor-proarrows", "arrow transformation lax binary proarrow comparitor compatibility", "paper"),
        ("del-composite", "arrow transformation arrow composition compatibility", "inline-display"),
        ("companion-composite", "companion and conjoint composition preservation", "paper"),
        ("companion-strict", "companion laws (strict half)", "paper"),
        ("conjoint-strict", "conjoint laws (strict half)", "paper"),
        ("swap-involution", "swap functor involution", "paper"),
    ]
    return entries
