"""Labelled quivers encoding operator domains/codomains, and compatibility.

Vertices stand for spaces, an edge v -> w with label x means the operator
behind x maps the space of v into the space of w.  A word labels a path by
applying its rightmost letter first (operator composition), so the signature
of a product composes relationally.  A polynomial is compatible with the
quiver when all its monomials label paths sharing at least one common
(source, target) pair.
"""

from .freealg import variables_used


class QuiverError(ValueError):
    pass


class Quiver:
    """Directed multigraph with variable-labelled edges.

    edges: iterable of (source, target, label) where source/target are vertex
    names (strings) and label is a variable index of `alphabet`.  A label may
    decorate several edges.
    """

    def __init__(self, alphabet, edges, vertices=()):
        self.alphabet = alphabet
        self.edges = tuple((str(s), str(t), int(x)) for s, t, x in edges)
        verts = set(vertices)
        for s, t, _ in self.edges:
            verts.add(s)
            verts.add(t)
        self.vertices = tuple(sorted(verts))
        self._by_label = {}
        for s, t, x in self.edges:
            self._by_label.setdefault(x, set()).add((s, t))

    def labels(self):
        return sorted(self._by_label)

    def label_pairs(self, x):
        try:
            return self._by_label[x]
        except KeyError:
            raise QuiverError(
                f"variable {self.alphabet.name(x)!r} labels no edge of the quiver"
            ) from None

    # ---- signatures -----------------------------------------------------------

    def mono_signature(self, m):
        """All (source, target) pairs of paths labelled by the word m.

        The empty word labels the empty path at every vertex: {(v, v)}.
        An empty result means m is not realizable as a path.
        """
        if not m:
            return frozenset((v, v) for v in self.vertices)
        # rightmost letter is applied first
        sig = self.label_pairs(m[-1])
        for x in m[-2::-1]:
            step = self.label_pairs(x)
            sig = {(s, t2) for (s, t) in sig for (s2, t2) in step if t == s2}
            if not sig:
                return frozenset()
        return frozenset(sig)

    def poly_signature(self, f):
        """Intersection of the monomial signatures over supp(f)."""
        if f.is_zero:
            return frozenset((v, w) for v in self.vertices for w in self.vertices)
        sigs = [self.mono_signature(w) for w in f.support()]
        out = sigs[0]
        for s in sigs[1:]:
            out = out & s
        return out

    def is_compatible(self, f):
        """(compatible?, witness pair or None).

        The zero polynomial is compatible with every pair; the witness is the
        lexicographically smallest common pair for determinism.
        """
        if f.is_zero:
            return True, None
        sig = self.poly_signature(f)
        if not sig:
            return False, None
        return True, min(sig)

    def check_labels_cover(self, f):
        """Error unless every variable of f labels at least one edge."""
        for x in sorted(variables_used(f)):
            self.label_pairs(x)

    def is_adjoint_closed(self):
        """True if reversing any edge and swapping its label for the partner
        stays inside the edge set (needed for adjoint-compatibility)."""
        edge_set = {(s, t, x) for s, t, x in self.edges}
        for s, t, x in self.edges:
            p = self.alphabet.symbols[x].partner
            if p is None or (t, s, p) not in edge_set:
                return False
        return True

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.edges)} edges)"
