"""Signed Gauss codes for flat virtual links.

A code is a finite set of named components, each a cyclic sequence of
passages through crossings.  Every crossing is visited exactly twice
(possibly by two different components) and carries a sign in {+1, -1}: the
sign is +1 when the frame (tangent at the first passage, tangent at the
second passage) is positively oriented with respect to the ambient surface
orientation.  "First" and "second" refer to the traversal order of the
written representative: components in their stored order, each read from
its stored starting point.

Because the sign is defined relative to that traversal order, re-cutting a
cyclic component at a different point swaps first/second for every crossing
whose two passages straddle the old starting point, and therefore flips the
stored sign of exactly those crossings.  All layout-changing helpers in
this module (rotation, component reordering) perform that fix-up, so that
the underlying curve configuration, not the accidental starting points, is
what a code value means.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass

from .errors import CodeSyntaxError, NotASelfCrossing, UnknownComponent, ValidationError

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+$")
_TOKEN_RE = re.compile(r"([A-Za-z0-9_]+)([+-])")


@dataclass(frozen=True)
class Passage:
    """One visit of a component through a crossing."""

    crossing: str
    slot: int  # 0 = first occurrence in traversal order, 1 = second

    def __repr__(self):
        return f"{self.crossing}[{self.slot}]"


@dataclass(frozen=True)
class GaussCode:
    """An immutable signed Gauss code.

    components: tuple of (name, passages) where passages is a tuple of
        crossing labels in cyclic order.  Components may be empty
        (crossingless circles).
    signs: tuple of (label, sign) pairs sorted by label.
    """

    components: tuple
    signs: tuple

    # -- construction ------------------------------------------------------

    @staticmethod
    def make(components, signs):
        comps = tuple((str(name), tuple(str(p) for p in passages))
                      for name, passages in components)
        sign_map = {str(k): int(v) for k, v in dict(signs).items()}
        code = GaussCode(comps, tuple(sorted(sign_map.items())))
        code.validate()
        return code

    def validate(self):
        seen_names = set()
        counts = {}
        for name, passages in self.components:
            if name in seen_names:
                raise ValidationError(f"duplicate component name {name!r}")
            seen_names.add(name)
            for label in passages:
                counts[label] = counts.get(label, 0) + 1
        for label, n in counts.items():
            if n != 2:
                raise ValidationError(f"label {label!r} occurs {n} times, expected 2")
        sign_map = dict(self.signs)
        for label in counts:
            if label not in sign_map:
                raise ValidationError(f"label {label!r} has no sign")
            if sign_map[label] not in (+1, -1):
                raise ValidationError(f"label {label!r} has sign {sign_map[label]}")
        for label in sign_map:
            if label not in counts:
                raise ValidationError(f"sign given for absent label {label!r}")

    # -- basic queries ------------------------------------------------------

    @property
    def sign_map(self):
        return dict(self.signs)

    def sign(self, label):
        return self.sign_map[label]

    def names(self):
        return [name for name, _ in self.components]

    def component(self, name):
        for cname, passages in self.components:
            if cname == name:
                return passages
        raise UnknownComponent(name)

    def component_index(self, name):
        for i, (cname, _) in enumerate(self.components):
            if cname == name:
                return i
        raise UnknownComponent(name)

    def crossings(self):
        return sorted(dict(self.signs))

    def n_crossings(self):
        return len(self.signs)

    def occurrences(self):
        """Map label -> ((ci, pi), (cj, pj)) with positions in traversal order."""
        occ = {}
        for ci, (_, passages) in enumerate(self.components):
            for pi, label in enumerate(passages):
                occ.setdefault(label, []).append((ci, pi))
        return {label: (pos[0], pos[1]) for label, pos in occ.items()}

    def passage_slot(self, ci, pi):
        """Slot (0 or 1) of the passage at component ci, position pi."""
        label = self.components[ci][1][pi]
        first, _second = self.occurrences()[label]
        return 0 if (ci, pi) == first else 1

    def self_crossings(self, name):
        ci = self.component_index(name)
        out = []
        for label, (p1, p2) in self.occurrences().items():
            if p1[0] == ci and p2[0] == ci:
                out.append(label)
        return sorted(out)

    def shared_crossings(self, name1, name2):
        c1 = self.component_index(name1)
        c2 = self.component_index(name2)
        out = []
        for label, (p1, p2) in self.occurrences().items():
            if {p1[0], p2[0]} == {c1, c2} and c1 != c2:
                out.append(label)
        return sorted(out)

    # -- serialization ------------------------------------------------------

    def to_text(self):
        parts = []
        sign_map = self.sign_map
        for name, passages in self.components:
            toks = " ".join(f"{p}{'+' if sign_map[p] > 0 else '-'}" for p in passages)
            parts.append(f"{name}: {toks}" if toks else f"{name}:")
        return " ; ".join(parts)

    def to_json_obj(self):
        sign_map = self.sign_map
        return {
            "components": [
                {
                    "name": name,
                    "passages": [
                        {"crossing": p, "sign": "+" if sign_map[p] > 0 else "-"}
                        for p in passages
                    ],
                }
                for name, passages in self.components
            ]
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def __str__(self):
        return self.to_text()


def parse_code(text):
    """Parse the one-line text format ``"A: a+ b- ; B: a+ b-"``."""
    components = []
    signs = {}
    chunks = text.split(";")
    for chunk in chunks:
        if ":" not in chunk:
            raise CodeSyntaxError(f"component chunk {chunk!r} lacks ':'")
        name, _, body = chunk.partition(":")
        name = name.strip()
        if not name or not _LABEL_RE.match(name):
            raise CodeSyntaxError(f"bad component name {name!r}")
        passages = []
        for tok in body.split():
            m = _TOKEN_RE.fullmatch(tok)
            if not m:
                raise CodeSyntaxError(f"bad passage token {tok!r}")
            label, sgn = m.group(1), 1 if m.group(2) == "+" else -1
            if label in signs and signs[label] != sgn:
                raise ValidationError(f"label {label!r} carries both signs")
            signs[label] = sgn
            passages.append(label)
        components.append((name, passages))
    return GaussCode.make(components, signs)


def from_json(obj):
    """Parse the JSON mirror of the text format."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    components = []
    signs = {}
    for comp in obj["components"]:
        passages = []
        for p in comp["passages"]:
            label = str(p["crossing"])
            sgn = p["sign"]
            sgn = 1 if sgn in ("+", 1, "+1") else -1
            if label in signs and signs[label] != sgn:
                raise ValidationError(f"label {label!r} carries both signs")
            signs[label] = sgn
            passages.append(label)
        components.append((comp["name"], passages))
    return GaussCode.make(components, signs)


# -- layout changes with sign bookkeeping ------------------------------------


def relayout(code, new_layout):
    """Rebuild a code from a new passage layout.

    new_layout: list of (name, [(old_ci, old_pi), ...]) covering every old
    passage exactly once.  Crossings whose two passages end up in the
    opposite traversal order get their sign flipped, so the rebuilt code
    denotes the same curve configuration.
    """
    newpos = {}
    comps = []
    for nci, (name, refs) in enumerate(new_layout):
        labels = []
        for npi, (oci, opi) in enumerate(refs):
            newpos[(oci, opi)] = (nci, npi)
            labels.append(code.components[oci][1][opi])
        comps.append((name, tuple(labels)))
    signs = {}
    for label, (p1, p2) in code.occurrences().items():
        if p1 not in newpos and p2 not in newpos:
            continue  # crossing removed entirely
        if (p1 in newpos) != (p2 in newpos):
            raise ValidationError(f"layout keeps only one passage of {label!r}")
        s = code.sign(label)
        if newpos[p1] > newpos[p2]:
            s = -s
        signs[label] = s
    return GaussCode.make(comps, signs)


def rotate_component(code, name, k):
    """Cut the named component at a new starting point (k positions later)."""
    ci = code.component_index(name)
    layout = []
    for i, (cname, passages) in enumerate(code.components):
        n = len(passages)
        if i == ci and n:
            refs = [(i, (j + k) % n) for j in range(n)]
        else:
            refs = [(i, j) for j in range(n)]
        layout.append((cname, refs))
    return relayout(code, layout)


def sort_components(code):
    """Reorder components by name (sign-correct)."""
    order = sorted(range(len(code.components)), key=lambda i: code.components[i][0])
    layout = [
        (code.components[i][0], [(i, j) for j in range(len(code.components[i][1]))])
        for i in order
    ]
    return relayout(code, layout)


# -- canonical form -----------------------------------------------------------


def _stream_key(passages_list, sign_map, occ_first):
    """Token stream for a fixed layout: first visits introduce crossings."""
    tokens = []
    index = {}
    for passages in passages_list:
        tokens.append(-1)  # component separator
        for label in passages:
            if label not in index:
                index[label] = len(index)
                tokens.append(2 * index[label] + (0 if sign_map[label] > 0 else 1))
                tokens.append(-2)  # marks a first visit
            else:
                tokens.append(2 * index[label] + (0 if sign_map[label] > 0 else 1))
    return tuple(tokens)


def canonical_form(code):
    """The unique representative under crossing relabeling and rotation.

    Components are put in name order; each component is then cut at the
    starting point that minimizes the relabeled, serialized code (with the
    straddle sign fix-ups applied).  Crossings are renamed x0, x1, ... in
    first-visit order.  Idempotent by construction.
    """
    base = sort_components(code)
    comps = base.components
    rot_choices = [range(max(1, len(p))) for _, p in comps]

    best_key = None
    best_code = None
    for rots in itertools.product(*rot_choices):
        cand = base
        for (name, passages), k in zip(comps, rots):
            if k and passages:
                cand = rotate_component(cand, name, k)
        key = _stream_key([p for _, p in cand.components], cand.sign_map, None)
        if best_key is None or key < best_key:
            best_key = key
            best_code = cand

    # relabel crossings in first-visit order
    index = {}
    for _, passages in best_code.components:
        for label in passages:
            if label not in index:
                index[label] = f"x{len(index)}"
    comps = [(name, tuple(index[p] for p in passages))
             for name, passages in best_code.components]
    signs = {index[l]: s for l, s in best_code.signs}
    return GaussCode.make(comps, signs)


def canonical_key(code):
    """Hashable canonical identity, cheap enough for search frontiers."""
    return canonical_form(code).to_text()


# -- smoothing ---------------------------------------------------------------


def smooth_positions(code, label):
    """Split positions of an orientation-compatible smoothing at a self-crossing.

    Returns (arc1, arc2): arc1 lists the (ci, pi) positions strictly between
    the first and second passage of the crossing, arc2 the remaining ones;
    the smoothed crossing itself is dropped from both.
    """
    occ = code.occurrences()
    if label not in occ:
        raise UnknownComponent(label)
    (c1, p1), (c2, p2) = occ[label]
    if c1 != c2:
        raise NotASelfCrossing(label)
    passages = code.components[c1][1]
    n = len(passages)
    arc1 = [(c1, (p1 + k) % n) for k in range(1, (p2 - p1) % n)]
    arc2 = [(c1, (p2 + k) % n) for k in range(1, (p1 - p2) % n)]
    return arc1, arc2


def smooth_at(code, label):
    """The two cyclic label sequences obtained by smoothing at a self-crossing."""
    arc1, arc2 = smooth_positions(code, label)
    comp = {}
    for ci, (_, passages) in enumerate(code.components):
        comp[ci] = passages
    seq1 = tuple(comp[ci][pi] for ci, pi in arc1)
    seq2 = tuple(comp[ci][pi] for ci, pi in arc2)
    return seq1, seq2
