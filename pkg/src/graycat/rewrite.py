"""Rule database, subterm matching, rewriting, and bounded equality search.

Rules come in two species: equation rules (concrete left/right terms,
instantiated over the signature's generators when the database is built,
matched as segments of flattened composites up to uniform whiskering) and
builtin rules (middle-four exchange and inverse cancellation/introduction,
which need positional parameters).

Every equation rule passes a boundary check at registration.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .cells import Arrow, Path, Proarrow, path, whisker_arrow, whisker_pro
from .errors import (
    EndpointMismatch,
    GuardFailed,
    GraycatError,
    IllTyped,
    NoMatch,
    NotComparable,
    RuleBoundaryMismatch,
)
from .kernel import (
    Boundary3,
    Coh,
    HId,
    HSeq,
    Inv,
    Ixc,
    SqGenRef,
    Struct,
    VId,
    VSeq,
    Whisk,
    boundary3,
    hcomp,
    is_invertible,
    vcomp,
)
from .normalize import normalize_strict


@dataclass(frozen=True)
class Position:
    """A path of child indices, optionally a window/cut in a composite.

    `start == stop` denotes a cut (for identity-sided rules and inverse
    introduction); `axis` disambiguates cuts at non-composite nodes.
    """

    path: tuple = ()
    start: int | None = None
    stop: int | None = None
    axis: str | None = None  # 'v' | 'h' for cuts at non-composite nodes

    def render(self):
        core = "[" + ",".join(str(i) for i in self.path) + "]"
        if self.start is not None:
            core += f":{self.start}..{self.stop}"
            if self.axis:
                core += self.axis
        return core


@dataclass
class Rule:
    name: str
    paper_key: str
    orientation: str  # 'bidirectional' | 'strict-oriented'
    guards: tuple = ()
    lhs: object = None
    rhs: object = None
    builtin: object = None
    provenance: str = "paper"
    priority: int = 100

    @property
    def is_builtin(self):
        return self.builtin is not None


@dataclass
class RuleDB:
    sig: object
    rules: list
    by_name: dict
    invertibles: list  # candidate cells for inverse introduction

    def get(self, name):
        rule = self.by_name.get(name)
        if rule is None:
            raise GuardFailed(f"rule {name!r} is not available under this signature's flags", rule=name)
        return rule


# ---------------------------------------------------------------------------
# positions
# ---------------------------------------------------------------------------


def children(t):
    if isinstance(t, (VSeq, HSeq)):
        return t.items
    if isinstance(t, (Whisk, Inv)):
        return (t.body,)
    return ()


def subterm(t, path_):
    cur = t
    for i in path_:
        kids = children(cur)
        if i >= len(kids):
            raise NoMatch(f"no child {i} at {cur!r}")
        cur = kids[i]
    return cur


def replace_subterm(t, path_, new):
    if not path_:
        return new
    i, rest = path_[0], path_[1:]
    kids = list(children(t))
    kids[i] = replace_subterm(kids[i], rest, new)
    if isinstance(t, (VSeq, HSeq)):
        return type(t)(tuple(kids))
    if isinstance(t, Whisk):
        return Whisk(t.left, kids[0], t.right)
    if isinstance(t, Inv):
        return Inv(kids[0])
    raise NoMatch("cannot replace under a leaf")


def all_node_positions(t, prefix=()):
    yield prefix
    for i, k in enumerate(children(t)):
        yield from all_node_positions(k, prefix + (i,))


# ---------------------------------------------------------------------------
# whisker-matching
# ---------------------------------------------------------------------------


def strip_paths(t):
    """Erase all whisker/path data, keeping the combinatorial skeleton.
    Uniformly whiskered terms strip equal."""
    if isinstance(t, VId):
        return ("VId", tuple(("h", _core_key(a.core)) for a in t.pro.atoms))
    if isinstance(t, HId):
        return ("HId", tuple(("v", _core_key(a.core)) for a in t.arr.atoms))
    if isinstance(t, (VSeq, HSeq)):
        return (type(t).__name__, tuple(strip_paths(x) for x in t.items))
    if isinstance(t, Whisk):
        return strip_paths(t.body)
    if isinstance(t, Inv):
        return ("Inv", strip_paths(t.body))
    if isinstance(t, Ixc):
        return (
            "Ixc",
            t.kind,
            t.variance,
            tuple(_core_key(a.core) for a in t.a.atoms),
            tuple(_core_key(a.core) for a in t.b.atoms),
        )
    if isinstance(t, Coh):
        return ("Coh", t.kind, tuple(tuple(_core_key(a.core) for a in m.atoms) for m in t.args))
    if isinstance(t, Struct):
        return ("Struct", repr(t.tag))
    if isinstance(t, SqGenRef):
        return ("Sq", t.name)
    return ("?", repr(t))


def _core_key(core):
    return repr(core)


def match_mod_whisker(sig, candidate, side):
    """If candidate == Whisk(l, side, r) up to normalization, return (l, r).

    Both terms must already be strict-normal.  Returns None when they do
    not match.
    """
    if candidate == side:
        b = boundary3(sig, side)
        o = b.hsrc.src.src
        return Path(o, o, ()), Path(b.hsrc.src.tgt, b.hsrc.src.tgt, ())
    if strip_paths(candidate) != strip_paths(side):
        return None
    bc = boundary3(sig, candidate)
    bs = boundary3(sig, side)
    cw = bc.hsrc.src.word
    sw = bs.hsrc.src.word
    diff = len(cw) - len(sw)
    if diff < 0:
        return None
    for k in range(diff + 1):
        lw = cw[:k]
        rw = cw[k + len(sw):]
        if cw[k : k + len(sw)] != sw:
            continue
        try:
            l = path(sig, lw) if lw else Path(bc.hsrc.src.src, bc.hsrc.src.src, ())
            r = path(sig, rw) if rw else Path(bc.hsrc.src.tgt, bc.hsrc.src.tgt, ())
            if l.tgt != bs.hsrc.src.src or bs.hsrc.src.tgt != r.src:
                continue
            whiskered = normalize_strict(sig, Whisk(l, side, r))
        except Exception:
            continue
        if whiskered == candidate:
            return l, r
    return None


# ---------------------------------------------------------------------------
# window extraction and splicing
# ---------------------------------------------------------------------------


def _window_term(sig, node, start, stop, axis):
    if isinstance(node, (VSeq, HSeq)):
        items = node.items[start:stop]
        if not items:
            return None  # a cut
        if len(items) == 1:
            return items[0]
        return type(node)(items)
    if start == 0 and stop == 1:
        return node
    return None


def _cut_boundary(sig, node, k, axis):
    """Boundary 2-cell at cut position k: the arrow (h axis) or proarrow
    (v axis) where an insertion would sit."""
    if axis == "h":
        items = node.items if isinstance(node, HSeq) else (node,)
        if k == 0:
            return boundary3(sig, items[0]).vsrc
        return boundary3(sig, items[k - 1]).vtgt
    items = node.items if isinstance(node, VSeq) else (node,)
    if k == 0:
        return boundary3(sig, items[0]).hsrc
    return boundary3(sig, items[k - 1]).htgt


def _splice(sig, t, pos, node, replacement):
    """Replace the window at pos with `replacement` and renormalize."""
    same_axis = (
        isinstance(node, VSeq) and (pos.axis in (None, "v"))
        or isinstance(node, HSeq) and (pos.axis in (None, "h"))
    )
    if isinstance(node, (VSeq, HSeq)) and same_axis:
        cls = type(node)
        rep_items = (
            list(replacement.items) if isinstance(replacement, cls) else [replacement]
        )
        items = list(node.items)
        items[pos.start : pos.stop] = rep_items
        new_node = cls(tuple(items)) if len(items) > 1 else (items[0] if items else replacement)
    else:
        # node treated as a singleton composite on the cut axis
        cls = HSeq if pos.axis == "h" else VSeq
        if pos.start == pos.stop:  # insertion next to the node
            items = [node]
            rep_items = (
                list(replacement.items) if isinstance(replacement, cls) else [replacement]
            )
            items[pos.start : pos.start] = rep_items
            new_node = cls(tuple(items))
        else:
            new_node = replacement
    return normalize_strict(sig, replace_subterm(t, pos.path, new_node))


# ---------------------------------------------------------------------------
# rule application
# ---------------------------------------------------------------------------


def _axis_of(node, side):
    if isinstance(node, VSeq):
        return "v"
    if isinstance(node, HSeq):
        return "h"
    return None


def _is_identity_cell(t):
    return isinstance(t, (VId, HId))


def apply_at(sig, db, t, rule, direction, pos, bindings=None):
    """Apply `rule` at `pos`; returns the rewritten, re-normalized term.

    The boundary is unchanged by construction (rules are registered with
    equal boundaries; splicing preserves the ambient context).
    """
    t = normalize_strict(sig, t)
    if rule.is_builtin:
        return rule.builtin.apply(sig, db, t, direction, pos, bindings or {})
    src_side, dst_side = (rule.lhs, rule.rhs) if direction == "fwd" else (rule.rhs, rule.lhs)
    if rule.orientation == "strict-oriented" and direction == "bwd":
        raise GuardFailed(f"rule {rule.name!r} is oriented; backward application is not allowed")
    node = subterm(t, pos.path)
    if pos.start is not None and pos.start == pos.stop:
        # cut application for identity-sided rules
        src_norm = normalize_strict(sig, src_side)
        if not _is_identity_cell(src_norm):
            raise NoMatch(f"rule {rule.name!r} has no identity side for a cut application")
        axis_needed = "h" if isinstance(src_norm, HId) else "v"
        axis = pos.axis or _axis_of(node, None)
        if axis != axis_needed:
            raise NoMatch(f"cut axis {axis!r} does not fit rule {rule.name!r}")
        bnd = _cut_boundary(sig, node, pos.start, axis)
        ident = HId(bnd) if axis == "h" else VId(bnd)
        ident = normalize_strict(sig, ident)
        m = match_mod_whisker(sig, ident, normalize_strict(sig, src_side))
        if m is None:
            raise NoMatch(f"boundary at cut does not match rule {rule.name!r}")
        l, r = m
        replacement = normalize_strict(sig, Whisk(l, dst_side, r))
        return _splice(sig, t, pos, node, replacement)
    window = _window_term(sig, node, pos.start if pos.start is not None else 0,
                          pos.stop if pos.stop is not None else 1, pos.axis) \
        if pos.start is not None else node
    if window is None:
        raise NoMatch("empty window for a non-identity rule")
    window_n = normalize_strict(sig, window)
    m = match_mod_whisker(sig, window_n, normalize_strict(sig, src_side))
    dst = dst_side
    if m is None and is_invertible(sig, src_side) and is_invertible(sig, dst_side):
        # equalities of invertible cells lift through Inv
        m = match_mod_whisker(sig, window_n, normalize_strict(sig, Inv(src_side)))
        dst = Inv(dst_side)
    if m is None:
        raise NoMatch(f"rule {rule.name!r} does not match at {pos.render()}")
    l, r = m
    replacement = normalize_strict(sig, Whisk(l, dst, r))
    if pos.start is None:
        return normalize_strict(sig, replace_subterm(t, pos.path, replacement))
    return _splice(sig, t, pos, node, replacement)


# ---------------------------------------------------------------------------
# builtins: middle-four exchange, inverse cancellation/introduction
# ---------------------------------------------------------------------------


class MiddleFour:
    """VComp of two horizontal composites <-> HComp of two vertical ones.

    Forward: a window [X, Y] in a VSeq with X, Y horizontally split at
    matching boundaries turns into the exchanged HSeq.  Backward: the same
    on an HSeq window.  Bindings: {"i": split of X, "j": split of Y}.
    """

    def apply(self, sig, db, t, direction, pos, bindings):
        node = subterm(t, pos.path)
        outer = VSeq if direction == "fwd" else HSeq
        inner = HSeq if direction == "fwd" else VSeq
        if not isinstance(node, outer):
            raise NoMatch("middle-four needs a two-item window in a composite")
        start = pos.start if pos.start is not None else 0
        stop = pos.stop if pos.stop is not None else len(node.items)
        if stop - start != 2 or stop > len(node.items):
            raise NoMatch("middle-four needs a window of exactly two items")
        x, y = node.items[start], node.items[start + 1]
        xi = list(x.items) if isinstance(x, inner) else [x]
        yi = list(y.items) if isinstance(y, inner) else [y]
        i = bindings.get("i")
        j = bindings.get("j")
        options = [(i, j)] if i is not None and j is not None else [
            (a, b)
            for a in range(0, len(xi) + 1)
            for b in range(0, len(yi) + 1)
            if (a, b) not in ((0, 0), (len(xi), len(yi)))
        ]
        for a, b in options:
            if not (0 <= a <= len(xi) and 0 <= b <= len(yi)):
                continue
            cols = []
            first = [q for q in (xi[:a], yi[:b]) if q]
            second = [q for q in (xi[a:], yi[b:]) if q]
            if not first or not second:
                continue
            cols.append(_mk(outer, [_mk(inner, q) for q in first]))
            cols.append(_mk(outer, [_mk(inner, q) for q in second]))
            try:
                exchanged = _mk(inner, cols)
                boundary3(sig, exchanged)
                return _splice(sig, t, replace(pos, start=start, stop=stop), node, exchanged)
            except GraycatError:
                continue
        raise NoMatch("no middle-four split aligns at this window")

    def enumerate(self, sig, db, t, pos):
        node = subterm(t, pos.path)
        for direction, outer, inner in (("fwd", VSeq, HSeq), ("bwd", HSeq, VSeq)):
            if not isinstance(node, outer):
                continue
            n = len(node.items)
            for start in range(n - 1):
                x, y = node.items[start], node.items[start + 1]
                xi = x.items if isinstance(x, inner) else (x,)
                yi = y.items if isinstance(y, inner) else (y,)
                for a in range(0, len(xi) + 1):
                    for b in range(0, len(yi) + 1):
                        if (a, b) in ((0, 0), (len(xi), len(yi))):
                            continue
                        yield direction, replace(pos, start=start, stop=start + 2), {"i": a, "j": b}


def _mk(cls, items):
    return items[0] if len(items) == 1 else cls(tuple(items))


class InverseCancel:
    """HComp(x, Inv x) -> identity (and the VComp analogue); backward
    introduces a cancelling pair at a cut, binding {"cell": D, "flip": bool}.
    """

    def apply(self, sig, db, t, direction, pos, bindings):
        node = subterm(t, pos.path)
        if direction == "fwd":
            start = pos.start if pos.start is not None else 0
            stop = pos.stop if pos.stop is not None else 2
            if not isinstance(node, (VSeq, HSeq)) or stop - start != 2:
                raise NoMatch("inverse cancellation needs a two-item window")
            x, y = node.items[start], node.items[start + 1]
            if normalize_strict(sig, Inv(x)) != y:
                raise NoMatch("window is not an inverse pair")
            b = boundary3(sig, x)
            rep = HId(b.vsrc) if isinstance(node, HSeq) else VId(b.hsrc)
            return _splice(sig, t, replace(pos, start=start, stop=stop), node, rep)
        cell = bindings.get("cell")
        if cell is None:
            raise NoMatch("inverse introduction needs a 'cell' binding")
        if not is_invertible(sig, cell):
            raise GuardFailed("inverse introduction needs an invertible cell")
        flip = bindings.get("flip", False)
        first = normalize_strict(sig, Inv(cell) if flip else cell)
        second = normalize_strict(sig, cell if flip else Inv(cell))
        axis = _axis_of(node, None) or pos.axis
        pair = (HSeq if axis == "h" else VSeq)((first, second))
        bnd = _cut_boundary(sig, node, pos.start, axis)
        bfirst = boundary3(sig, first)
        want = bfirst.vsrc if axis == "h" else bfirst.hsrc
        if want != bnd:
            raise NoMatch("introduced pair does not fit the cut boundary")
        return _splice(sig, t, pos, node, pair)

    def enumerate(self, sig, db, t, pos):
        node = subterm(t, pos.path)
        if isinstance(node, (VSeq, HSeq)):
            axis = "h" if isinstance(node, HSeq) else "v"
            n = len(node.items)
            for start in range(n - 1):
                x, y = node.items[start], node.items[start + 1]
                try:
                    if normalize_strict(sig, Inv(x)) == y:
                        yield "fwd", replace(pos, start=start, stop=start + 2), {}
                except IllTyped:
                    pass
            cuts = range(n + 1)
        else:
            cuts = (0, 1)
        cand_index = getattr(db, "_cand_index", None)
        if cand_index is None:
            cand_index = {}
            for cand in db.invertibles:
                bc = boundary3(sig, cand)
                cand_index.setdefault(("h", bc.vsrc), []).append((cand, False))
                cand_index.setdefault(("h", bc.vtgt), []).append((cand, True))
                cand_index.setdefault(("v", bc.hsrc), []).append((cand, False))
                cand_index.setdefault(("v", bc.htgt), []).append((cand, True))
            db._cand_index = cand_index
        for k in cuts:
            for axis in ("h", "v"):
                if isinstance(node, VSeq) and axis == "h":
                    continue
                if isinstance(node, HSeq) and axis == "v":
                    continue
                try:
                    bnd = _cut_boundary(sig, node, k, axis)
                except Exception:
                    continue
                want_arrow = axis == "h"
                if want_arrow and not isinstance(bnd, Arrow):
                    continue
                if not want_arrow and not isinstance(bnd, Proarrow):
                    continue
                for cand, flip in cand_index.get((axis, bnd), ()):
                    bindings = {"cell": cand, "flip": True} if flip else {"cell": cand}
                    yield "bwd", replace(pos, start=k, stop=k, axis=axis), bindings


# ---------------------------------------------------------------------------
# rule database
# ---------------------------------------------------------------------------


def builtin_rules(sig):
    """All rules whose guards are satisfiable under the signature's flags.

    Every equation rule is boundary-checked here; a failure is a shipped
    bug, reported as RuleBoundaryMismatch.
    """
    from . import catalog

    rules = [
        Rule("middle-four", "middle-four exchange", "bidirectional",
             builtin=MiddleFour(), provenance="adopted-standard", priority=50),
        Rule("inverse-cancel", "pseudo inverse laws", "bidirectional",
             builtin=InverseCancel(), provenance="paper", priority=40),
    ]
    rules.extend(catalog.equation_rules(sig))
    by_name = {}
    for r in rules:
        if r.name in by_name:
            raise RuleBoundaryMismatch(f"duplicate rule name {r.name!r}")
        by_name[r.name] = r
    for r in rules:
        if r.is_builtin:
            continue
        try:
            bl = boundary3(sig, r.lhs)
            br = boundary3(sig, r.rhs)
        except IllTyped as e:
            raise RuleBoundaryMismatch(f"rule {r.name!r} is ill-typed: {e}") from e
        if bl != br:
            raise RuleBoundaryMismatch(
                f"rule {r.name!r} has mismatched boundaries", rule=r.name
            )
        r.lhs = normalize_strict(sig, r.lhs)
        r.rhs = normalize_strict(sig, r.rhs)
    return RuleDB(sig, rules, by_name, catalog.invertible_candidates(sig))


# ---------------------------------------------------------------------------
# rewrite enumeration and bounded search
# ---------------------------------------------------------------------------


def _rule_index(db):
    """strip-skeleton -> [(rule, direction)] for fast occurrence lookup."""
    sig = db.sig
    index = {}
    for r in db.rules:
        if r.is_builtin:
            continue
        dirs = [("fwd", r.lhs), ("bwd", r.rhs)]
        if r.orientation == "strict-oriented":
            dirs = [("fwd", r.lhs)]
        for d, side in dirs:
            index.setdefault(strip_paths(side), []).append((r, d))
        if is_invertible(sig, r.lhs) and is_invertible(sig, r.rhs):
            for d, side in dirs:
                try:
                    lifted = normalize_strict(sig, Inv(side))
                except IllTyped:
                    continue
                index.setdefault(strip_paths(lifted), []).append((r, d))
    return index


def _identity_rule_index(sig, db):
    """Rules with an identity-valued side, grouped for cut lookups."""
    out = []
    for rule in db.rules:
        if rule.is_builtin:
            continue
        for d, side in (("fwd", rule.lhs), ("bwd", rule.rhs)):
            if rule.orientation == "strict-oriented" and d == "bwd":
                continue
            side_n = normalize_strict(sig, side)
            if _is_identity_cell(side_n):
                axis = "h" if isinstance(side_n, HId) else "v"
                out.append((rule, d, axis))
    return out


def enumerate_rewrites(sig, db, t):
    """All single-step rewrites of `t`, deterministically ordered.

    Yields (rule, direction, position, bindings, result).
    """
    t = normalize_strict(sig, t)
    index = getattr(db, "_strip_index", None)
    if index is None:
        index = _rule_index(db)
        db._strip_index = index
    id_rules = getattr(db, "_id_rules", None)
    if id_rules is None:
        id_rules = _identity_rule_index(sig, db)
        db._id_rules = id_rules
    out = []
    for node_path in all_node_positions(t):
        node = subterm(t, node_path)
        # full-node and window matches for equation rules
        windows = [Position(node_path)]
        if isinstance(node, (VSeq, HSeq)):
            item_keys = [strip_paths(x) for x in node.items]
            n = len(node.items)
            tag = type(node).__name__
            for a in range(n):
                for b in range(a + 1, n + 1):
                    if (a, b) == (0, n):
                        continue
                    key = item_keys[a] if b == a + 1 else (tag, tuple(item_keys[a:b]))
                    if key in index:
                        windows.append(Position(node_path, a, b))
        for pos in windows:
            if pos.start is None:
                window = node
            else:
                window = _window_term(sig, node, pos.start, pos.stop, None)
            if window is None:
                continue
            key = strip_paths(window)
            for rule, d in index.get(key, ()):
                try:
                    res = apply_at(sig, db, t, rule, d, pos)
                except GraycatError:
                    continue
                out.append((rule, d, pos, {}, res))
        # identity-sided rules at cuts
        if isinstance(node, (VSeq, HSeq)):
            axis = "h" if isinstance(node, HSeq) else "v"
            cuts = [Position(node_path, k, k, axis) for k in range(len(node.items) + 1)]
        else:
            cuts = [Position(node_path, k, k, ax) for k in (0, 1) for ax in ("h", "v")]
        for pos in cuts:
            for rule, d, axis in id_rules:
                if axis != pos.axis:
                    continue
                try:
                    res = apply_at(sig, db, t, rule, d, pos)
                except GraycatError:
                    continue
                out.append((rule, d, pos, {}, res))
        # builtins
        for rule in db.rules:
            if not rule.is_builtin:
                continue
            for d, pos, bnd in rule.builtin.enumerate(sig, db, t, Position(node_path)):
                try:
                    res = rule.builtin.apply(sig, db, t, d, pos, bnd)
                except GraycatError:
                    continue
                out.append((rule, d, pos, bnd, res))
    out.sort(key=lambda e: (e[0].priority, e[0].name, e[1], e[2].path,
                            -1 if e[2].start is None else e[2].start,
                            -1 if e[2].stop is None else e[2].stop,
                            repr(sorted(e[3].items(), key=lambda kv: kv[0]))))
    return out


@dataclass(frozen=True)
class SearchStep:
    rule: str
    direction: str
    position: Position
    bindings: dict = field(default_factory=dict, hash=False, compare=False)


def eq_bounded(sig, db, s, t, fuel=8):
    """Fuel-bounded bidirectional search for a rewrite path s ~> t.

    Returns ("equal", witness_steps) or ("unknown", None); fuel counts rule
    applications.  The witness is a replayable forward step list.  Raises
    NotComparable when the boundaries differ.
    """
    s = normalize_strict(sig, s)
    t = normalize_strict(sig, t)
    try:
        bs = boundary3(sig, s)
        bt = boundary3(sig, t)
    except IllTyped as e:
        raise NotComparable(f"claim sides are ill-typed: {e}") from e
    if bs != bt:
        raise NotComparable("claim sides have different boundaries")
    if s == t:
        return "equal", []
    fwd = {s: (None, None)}  # state -> (parent state, depth)
    bwd = {t: (None, None)}
    fwd_frontier = [s]
    bwd_frontier = [t]
    df = dbk = 0

    def chain(seen, state):
        out = [state]
        while seen[state][0] is not None:
            state = seen[state][0]
            out.append(state)
        out.reverse()
        return out

    while True:
        expand_fwd = df <= dbk
        frontier = fwd_frontier if expand_fwd else bwd_frontier
        if not frontier or df + dbk + 1 > fuel:
            expand_fwd = not expand_fwd
            frontier = fwd_frontier if expand_fwd else bwd_frontier
            if not frontier or df + dbk + 1 > fuel:
                return "unknown", None
        if expand_fwd:
            df += 1
        else:
            dbk += 1
        seen = fwd if expand_fwd else bwd
        other = bwd if expand_fwd else fwd
        new_frontier = []
        meet = None
        for cur in frontier:
            for _rule, _d, _pos, _bnd, res in enumerate_rewrites(sig, db, cur):
                if res in seen:
                    continue
                seen[res] = (cur, None)
                if res in other:
                    meet = res
                    break
                new_frontier.append(res)
            if meet is not None:
                break
        if meet is not None:
            states = chain(fwd, meet) + list(reversed(chain(bwd, meet)))[1:]
            return "equal", _steps_for_state_chain(sig, db, states)
        if expand_fwd:
            fwd_frontier = new_frontier
        else:
            bwd_frontier = new_frontier


def _steps_for_state_chain(sig, db, states):
    """Recover a replayable step list from consecutive search states."""
    steps = []
    for u, v in zip(states, states[1:]):
        found = None
        for rule, d, pos, bnd, res in enumerate_rewrites(sig, db, u):
            if res == v:
                found = SearchStep(rule.name, d, pos, bnd)
                break
        if found is None:
            raise NoMatch("failed to reconstruct a witness step")
        steps.append(found)
    return steps


def replay(sig, db, start, steps):
    cur = normalize_strict(sig, start)
    for stp in steps:
        rule = db.get(stp.rule)
        cur = apply_at(sig, db, cur, rule, stp.direction, stp.position, stp.bindings)
    return cur
