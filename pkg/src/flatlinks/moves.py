"""The flat Reidemeister move grammar on signed Gauss codes.

Move kinds
    r1-  delete a crossing whose two passages are cyclically adjacent on one
         component (any sign); r1+ inserts such a kink at any gap with a
         chosen sign.
    r2-  delete two crossings x, y of opposite signs whose four passages form
         two disjoint adjacent pairs, each pair holding one passage of x and
         one of y, in either arrangement (xy/xy or xy/yx); r2+ inserts such a
         pair at any two gaps (possibly the same gap).
    r3   three crossings x, y, z whose passages form three disjoint adjacent
         pairs (xy), (xz), (yz) such that the three connecting arcs bound a
         triangular face of the surface realization; the move swaps the order
         inside all three pairs.

r1 and r3 moves never change the realization genus.  r2 moves can change it
by one: the surface of the new code is re-derived from scratch, and a pair
insertion at "linked" positions genuinely raises the genus (such codes
untangle again through the same move run backwards).

Sign bookkeeping: all applications are routed through a single rebuild that
re-derives first/second passage order and flips the stored sign of any
crossing whose passage order reversed, so moves commute with re-cutting the
components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carter import build_carter
from .codes import GaussCode, relayout
from .errors import IllegalMove


@dataclass(frozen=True)
class FlatMove:
    kind: str
    site: tuple

    def is_insert(self):
        return self.kind.endswith("+")


def _fresh_labels(code, k):
    used = set(code.crossings())
    out = []
    i = 0
    while len(out) < k:
        cand = f"m{i}"
        if cand not in used:
            out.append(cand)
            used.add(cand)
        i += 1
    return out


def _adjacent_pairs(code):
    """All cyclically adjacent position pairs with distinct labels."""
    pairs = []
    for ci, (_, passages) in enumerate(code.components):
        n = len(passages)
        if n < 2:
            continue
        for i in range(n):
            j = (i + 1) % n
            if passages[i] != passages[j]:
                pairs.append((ci, i))
    return pairs


def _pair_positions(code, pair):
    ci, i = pair
    n = len(code.components[ci][1])
    return ((ci, i), (ci, (i + 1) % n))


def _pair_labels(code, pair):
    (ci, i), (cj, j) = _pair_positions(code, pair)
    return (code.components[ci][1][i], code.components[cj][1][j])


def _r2_site_ok(code, pa, pb):
    """Geometric cancellation condition for two disjoint adjacent pairs.

    The two crossings cancel through a bigon exactly when their frame signs,
    measured in strand order (tangent of pa's strand first), are opposite.
    The stored sign uses slot order instead, so it is corrected by whether
    the crossing's pa-passage is its first passage.  Unlike raw stored-sign
    comparison this is invariant under re-cutting the components.
    """
    la, lb = _pair_labels(code, pa), _pair_labels(code, pb)
    if set(la) != set(lb) or len(set(la)) != 2:
        return False
    pos_a, pos_b = _pair_positions(code, pa), _pair_positions(code, pb)
    if set(pos_a) & set(pos_b):
        return False
    occ = code.occurrences()
    x, y = la
    if set(pos_a) | set(pos_b) != set(occ[x]) | set(occ[y]):
        return False
    adjusted = []
    for label, strand_pos in ((x, pos_a[0]), (y, pos_a[1])):
        slot_first = occ[label][0]
        sigma = +1 if strand_pos == slot_first else -1
        adjusted.append(code.sign(label) * sigma)
    return adjusted[0] == -adjusted[1]


def enumerate_moves(code, max_crossings=None):
    """Every applicable move of the grammar, each exactly once."""
    moves = []
    n_cross = code.n_crossings()

    # r1- : adjacent equal pair
    seen_r1 = set()
    for ci, (_, passages) in enumerate(code.components):
        n = len(passages)
        for i in range(n):
            j = (i + 1) % n
            if n >= 2 and passages[i] == passages[j] and passages[i] not in seen_r1:
                seen_r1.add(passages[i])
                moves.append(FlatMove("r1-", (ci, i)))

    # r1+ : kink insertion at any gap
    if max_crossings is None or n_cross + 1 <= max_crossings:
        for ci, (_, passages) in enumerate(code.components):
            gaps = range(max(1, len(passages)))
            for g in gaps:
                for sign in (+1, -1):
                    moves.append(FlatMove("r1+", (ci, g, sign)))

    # r2- : disjoint adjacent pairs covering two crossings, cancelling frames
    pairs = _adjacent_pairs(code)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if _r2_site_ok(code, pairs[a], pairs[b]):
                moves.append(FlatMove("r2-", tuple(sorted((pairs[a], pairs[b])))))

    # r2+ : insert a cancelling pair at two gaps
    if max_crossings is None or n_cross + 2 <= max_crossings:
        gap_list = []
        for ci, (_, passages) in enumerate(code.components):
            for g in range(max(1, len(passages))):
                gap_list.append((ci, g))
        for a in range(len(gap_list)):
            for b in range(a, len(gap_list)):
                for arrangement in ("par", "anti"):
                    for sign in (+1, -1):
                        moves.append(
                            FlatMove("r2+", (gap_list[a], gap_list[b], arrangement, sign))
                        )

    # r3 : triangle moves
    moves.extend(_triangle_moves(code, pairs))
    return moves


def _triangle_moves(code, pairs):
    by_labelset = {}
    for p in pairs:
        la = _pair_labels(code, p)
        key = frozenset(la)
        if len(key) == 2:
            by_labelset.setdefault(key, []).append(p)
    keys = sorted(by_labelset, key=sorted)
    moves = []
    face_sets = None
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            for k in range(j + 1, len(keys)):
                labels = keys[i] | keys[j] | keys[k]
                if len(labels) != 3:
                    continue
                if keys[i] | keys[j] == keys[i] | keys[k]:
                    continue
                for pi in by_labelset[keys[i]]:
                    for pj in by_labelset[keys[j]]:
                        for pk in by_labelset[keys[k]]:
                            triple = (pi, pj, pk)
                            pos = []
                            for p in triple:
                                pos += list(_pair_positions(code, p))
                            if len(set(pos)) != 6:
                                continue
                            occ = code.occurrences()
                            want = set()
                            for lab in labels:
                                want |= set(occ[lab])
                            if set(pos) != want:
                                continue
                            if face_sets is None:
                                face_sets = set(
                                    frozenset(f)
                                    for f in build_carter(code).face_arc_sets()
                                    if len(f) == 3
                                )
                            side_arcs = frozenset(triple)
                            if side_arcs in face_sets:
                                moves.append(FlatMove("r3", tuple(sorted(triple))))
    return moves


def apply_move(code, move):
    """Apply a move; raises IllegalMove when the site no longer matches."""
    if move.kind == "r1-":
        return _apply_r1_delete(code, move)
    if move.kind == "r1+":
        return _apply_r1_insert(code, move)
    if move.kind == "r2-":
        return _apply_r2_delete(code, move)
    if move.kind == "r2+":
        return _apply_r2_insert(code, move)
    if move.kind == "r3":
        return _apply_r3(code, move)
    raise IllegalMove(f"unknown move kind {move.kind!r}")


def _delete_positions(code, positions):
    removed = set(positions)
    layout = []
    for ci, (name, passages) in enumerate(code.components):
        refs = [(ci, pi) for pi in range(len(passages)) if (ci, pi) not in removed]
        layout.append((name, refs))
    return relayout(code, layout)


def _apply_r1_delete(code, move):
    ci, i = move.site
    try:
        passages = code.components[ci][1]
    except IndexError:
        raise IllegalMove("component index out of range")
    n = len(passages)
    if n < 2 or passages[i % n] != passages[(i + 1) % n]:
        raise IllegalMove("no adjacent equal pair at site")
    return _delete_positions(code, [(ci, i % n), (ci, (i + 1) % n)])


def _apply_r1_insert(code, move):
    ci, g, sign = move.site
    if ci >= len(code.components):
        raise IllegalMove("component index out of range")
    (label,) = _fresh_labels(code, 1)
    return _insert(code, [((ci, g), [label, label])], {label: sign})


def _apply_r2_delete(code, move):
    pa, pb = move.site
    try:
        ok = _r2_site_ok(code, pa, pb)
    except IndexError:
        raise IllegalMove("pair site out of range")
    if not ok:
        raise IllegalMove("not a cancelling pair site")
    pos = list(_pair_positions(code, pa)) + list(_pair_positions(code, pb))
    return _delete_positions(code, pos)


def _apply_r2_insert(code, move):
    (c1, g1), (c2, g2), arrangement, sign = move.site
    if c1 >= len(code.components) or c2 >= len(code.components):
        raise IllegalMove("component index out of range")
    x, y = _fresh_labels(code, 2)
    second = [x, y] if arrangement == "par" else [y, x]
    if (c1, g1) == (c2, g2):
        ins = [((c1, g1), [x, y] + second)]
    else:
        ins = [((c1, g1), [x, y]), ((c2, g2), second)]
    return _insert(code, ins, {x: sign, y: -sign})


def _insert(code, insertions, new_signs):
    """Insert new passages at gaps; signs are relative to the new layout."""
    by_comp = {}
    for (ci, g), labels in insertions:
        by_comp.setdefault(ci, []).append((g, labels))
    comps = []
    for ci, (name, passages) in enumerate(code.components):
        seq = [("old", ci, pi) for pi in range(len(passages))]
        todo = sorted(by_comp.get(ci, []), key=lambda t: t[0], reverse=True)
        for g, labels in todo:
            if g > len(code.components[ci][1]):
                raise IllegalMove("gap out of range")
            seq[g:g] = [("new", lab) for lab in labels]
        comps.append((name, seq))

    # Rebuild: old crossings keep geometry (flip when order reversed)
    newpos = {}
    out_comps = []
    for nci, (name, seq) in enumerate(comps):
        labels = []
        for npi, item in enumerate(seq):
            if item[0] == "old":
                _, oci, opi = item
                newpos[(oci, opi)] = (nci, npi)
                labels.append(code.components[oci][1][opi])
            else:
                labels.append(item[1])
        out_comps.append((name, tuple(labels)))
    signs = dict(new_signs)
    for label, (p1, p2) in code.occurrences().items():
        s = code.sign(label)
        if newpos[p1] > newpos[p2]:
            s = -s
        signs[label] = s
    return GaussCode.make(out_comps, signs)


def _apply_r3(code, move):
    triple = move.site
    labels = set()
    pos_pairs = []
    try:
        for p in triple:
            la = _pair_labels(code, p)
            labels |= set(la)
            pos_pairs.append(_pair_positions(code, p))
    except IndexError:
        raise IllegalMove("triangle site out of range")
    all_pos = [q for pp in pos_pairs for q in pp]
    if len(labels) != 3 or len(set(all_pos)) != 6:
        raise IllegalMove("not a triangle site")
    occ = code.occurrences()
    want = set()
    for lab in labels:
        want |= set(occ[lab])
    if set(all_pos) != want:
        raise IllegalMove("triangle pairs do not exhaust the three crossings")
    face_sets = set(
        frozenset(f) for f in build_carter(code).face_arc_sets() if len(f) == 3
    )
    if frozenset(triple) not in face_sets:
        raise IllegalMove("triangle arcs do not bound a face")
    swap = {}
    for (a, b) in pos_pairs:
        swap[a] = b
        swap[b] = a
    layout = []
    for ci, (name, passages) in enumerate(code.components):
        refs = [swap.get((ci, pi), (ci, pi)) for pi in range(len(passages))]
        layout.append((name, refs))
    return relayout(code, layout)


def inverse_exists(code_before, move, code_after, max_crossings=None):
    """Some enumerated move on code_after undoes the move up to canonical form."""
    from .codes import canonical_form

    target = canonical_form(code_before)
    cap = max(code_before.n_crossings(), code_after.n_crossings(),
              max_crossings or 0)
    for mv in enumerate_moves(code_after, max_crossings=cap):
        try:
            if canonical_form(apply_move(code_after, mv)) == target:
                return True
        except IllegalMove:
            continue
    return False
