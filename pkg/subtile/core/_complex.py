from ._predicates import polygon_edges


class SegmentComplex:
    """
    Finite set of closed segments with exact endpoints.

    Segments are stored with endpoints in key order, without repetition, sorted; a
    segment whose endpoints coincide stands for a single point.
    """

    def __init__(self, segments):
        seen = {}
        for p, q in segments:
            if q.key < p.key:
                p, q = q, p
            seen.setdefault((p.key, q.key), (p, q))
        self._segments = tuple(seen[k] for k in sorted(seen))
        self._float = None

    @property
    def segments(self):
        return self._segments

    def __len__(self):
        return len(self._segments)

    def __iter__(self):
        return iter(self._segments)

    def __eq__(self, other):
        if not isinstance(other, SegmentComplex):
            return NotImplemented
        return self.keys() == other.keys()

    def __hash__(self):
        return hash(self.keys())

    def keys(self):
        return tuple((p.key, q.key) for p, q in self._segments)

    def to_float(self):
        """Array of shape ``(n, 4)`` holding ``x0, y0, x1, y1`` per segment."""
        from numpy import asarray

        if self._float is None:
            rows = [p.to_float() + q.to_float() for p, q in self._segments]
            self._float = asarray(rows, float).reshape(-1, 4)
        return self._float

    def transformed(self, g):
        return SegmentComplex((g.apply(p), g.apply(q)) for p, q in self._segments)

    def __repr__(self):
        return f"SegmentComplex({len(self._segments)} segments)"


def boundary_complex(patch):
    """
    Union of the tile edges and color marks of a patch.

    Shared edges appear once; the two ends of an interval tile are degenerate
    segments.
    """
    segments = []
    for i in range(len(patch)):
        segments.extend(polygon_edges(patch.polygon(i)))
        mark = patch.mark(i)
        if mark is not None:
            segments.append(mark)
    return SegmentComplex(segments)
