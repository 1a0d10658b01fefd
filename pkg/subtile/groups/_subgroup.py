import math
from collections import namedtuple
from fractions import Fraction

from .._errors import UnsupportedRotationError
from ._rotations import UnitRotation, gaussian_rotation

SubgroupRelation = namedtuple("SubgroupRelation", ["relation", "index", "inner"])
SubgroupRelation.__doc__ = """
How two rotation groups sit relative to each other.

``relation`` is ``"equal"``, ``"index"``, ``"infinite index"`` or ``"incomparable"``.
``index`` is the finite index, and ``inner`` names the smaller group (``"first"`` or
``"second"``) when one contains the other.
"""

GRelDescriptor = namedtuple("GRelDescriptor", ["rotations", "order", "translations"])
GRelDescriptor.__doc__ = """
Closed group of motions spanned by all translations and the closure of a rotation
group: ``rotations`` is ``"cyclic"`` with ``order`` k, or ``"SO(2)"``.
"""


def _hermite(rows, ncols):
    """Row Hermite normal form over the integers: positive pivots, reduced above."""
    rows = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(ncols):
        while True:
            nz = [r for r in rows if r[col] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not p:
                    q = r[col] // p[col]
                    for k in range(col, ncols):
                        r[k] -= q * p[k]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            continue
        p = nz[0]
        rows = [r for r in rows if r is not p]
        if p[col] < 0:
            p = [-v for v in p]
        basis.append((col, p))

    for i, (col, p) in enumerate(basis):
        for _, r in basis[:i]:
            q = r[col] // p[col]
            if q:
                for k in range(col, ncols):
                    r[k] -= q * p[k]
    return [(col, tuple(p)) for col, p in basis]


class Membership:
    """
    Answer of :func:`member`. True members carry the witness exponents: the torsion
    exponent ``a`` and free exponents ``b`` with ``r = tᵃ · Π gᵢ^bᵢ``. Non-members
    carry a short ``obstruction``.
    """

    __slots__ = ("_ok", "_torsion", "_free", "_obstruction")

    def __init__(self, ok, torsion=None, free=None, obstruction=None):
        self._ok = bool(ok)
        self._torsion = torsion
        self._free = None if free is None else tuple(free)
        self._obstruction = obstruction

    def __bool__(self):
        return self._ok

    @property
    def torsion(self):
        return self._torsion

    @property
    def free(self):
        return self._free

    @property
    def obstruction(self):
        return self._obstruction

    def to_dict(self):
        if self._ok:
            return {"member": True, "torsion": self._torsion, "free": list(self._free)}
        return {"member": False, "obstruction": self._obstruction}

    def __repr__(self):
        if self._ok:
            return f"Membership(torsion={self._torsion}, free={list(self._free)})"
        return f"Membership(False, {self._obstruction!r})"


def _no(reason):
    return Membership(False, obstruction=reason)


class RotationSubgroup:
    """
    Finitely generated subgroup of SO(2), in normal form.

    Gaussian-rational groups are stored as the Hermite normal form of their exponent
    lattice: one row per free generator (prime exponents followed by the exponent
    of ``i``) and the step ``t`` of the torsion part ``⟨iᵗ⟩``. Groups of roots of
    unity are stored by their order ``k``. The torsion generator has turn ``1/k``
    in both cases.

    Use :func:`subgroup_from_generators` to build one.
    """

    def __init__(self, kind, order, primes=(), rows=(), generators=()):
        self._kind = kind
        self._order = int(order)
        self._primes = tuple(primes)
        self._rows = tuple(rows)
        self._generators = tuple(generators)
        self._certificate = tuple(member(self, g) for g in self._generators)

    @property
    def kind(self):
        """``"gaussian"`` or ``"cyclic"``."""
        return self._kind

    @property
    def torsion_order(self):
        return self._order

    @property
    def rank(self):
        return len(self._rows)

    @property
    def primes(self):
        return self._primes

    @property
    def generators(self):
        """The generators the group was built from."""
        return self._generators

    @property
    def certificate(self):
        """Witness exponents of every input generator in the normal form."""
        return self._certificate

    @property
    def torsion_generator(self):
        return UnitRotation.root_of_unity(Fraction(1, self._order))

    @property
    def free_basis(self):
        out = []
        for _, row in self._rows:
            exponents = dict(zip(self._primes, row[:-1]))
            out.append(UnitRotation.of(*gaussian_rotation(row[-1], exponents)))
        return out

    def basis(self):
        """The torsion generator followed by the free basis."""
        return [self.torsion_generator] + self.free_basis

    def _vector(self, r):
        exps = r.exponents
        extra = sorted(set(exps) - set(self._primes))
        if extra:
            return None, extra[0]
        return [exps.get(p, 0) for p in self._primes] + [r.unit], None

    def __eq__(self, other):
        if not isinstance(other, RotationSubgroup):
            return NotImplemented
        return subgroup_relation(self, other).relation == "equal"

    def __hash__(self):
        return hash(abstract_type(self))

    def to_dict(self):
        return {
            "kind": self._kind,
            "torsion_order": self._order,
            "rank": self.rank,
            "free_basis": [
                [str(v) for v in gaussian_rotation(r.unit, r.exponents)]
                for r in self.free_basis
            ],
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        aligned.add_item("kind", self._kind)
        aligned.add_item("torsion", f"Z_{self._order}")
        aligned.add_item("rank", self.rank)
        for i, r in enumerate(self.free_basis):
            aligned.add_item(f"free[{i}]", repr(r))
        return draw_title("Rotation subgroup") + aligned.draw()


def _as_unit(r):
    return r if isinstance(r, UnitRotation) else UnitRotation(r)


def subgroup_from_generators(gens):
    """
    Subgroup of SO(2) generated by rotations.

    Either every generator is Gaussian-rational, or every generator is a root of
    unity.

    Parameters
    ----------
    gens : iterable of UnitRotation or Rotation
        Generators.

    Returns
    -------
    RotationSubgroup

    Raises
    ------
    UnsupportedRotationError
        If the generators mix irrational roots of unity with rotations of infinite
        order.

    Examples
    --------
    .. doctest::

        >>> from subtile.groups import UnitRotation, abstract_type
        >>> from subtile.groups import subgroup_from_generators
        >>> i, u = UnitRotation.of(0, 1), UnitRotation.of("3/5", "4/5")
        >>> abstract_type(subgroup_from_generators([i])), abstract_type(
        ...     subgroup_from_generators([i, u]))
        ((4, 0), (4, 1))
    """
    gens = [_as_unit(g) for g in gens]
    if gens and all(g.is_gaussian for g in gens):
        primes = sorted({p for g in gens for p in g.exponents})
        n = len(primes)
        rows = [[g.exponents.get(p, 0) for p in primes] + [g.unit] for g in gens]
        rows.append([0] * n + [4])
        hnf = _hermite(rows, n + 1)
        free = [(c, r) for c, r in hnf if c < n]
        [(_, torsion)] = [(c, r) for c, r in hnf if c == n]
        order = 4 // torsion[-1]
        return RotationSubgroup("gaussian", order, primes, free, gens)
    if all(g.turn is not None for g in gens):
        order = math.lcm(*(g.order for g in gens)) if gens else 1
        return RotationSubgroup("cyclic", order, generators=gens)
    raise UnsupportedRotationError(
        "Generators mix irrational roots of unity with rotations of infinite order."
    )


def member(G, r):
    """
    Whether ``r`` lies in ``G``, with witness exponents.

    Parameters
    ----------
    G : RotationSubgroup
        Group.
    r : UnitRotation or Rotation
        Rotation to test.

    Returns
    -------
    Membership
        Truthy for members.

    Examples
    --------
    .. doctest::

        >>> from subtile.groups import UnitRotation, member, subgroup_from_generators
        >>> G = subgroup_from_generators(
        ...     [UnitRotation.of(0, 1), UnitRotation.of("3/5", "4/5")])
        >>> member(G, UnitRotation.of("7/25", "24/25"))
        Membership(torsion=2, free=[-2])
    """
    r = _as_unit(r)
    k = G.torsion_order
    if G.kind == "cyclic":
        if r.turn is None:
            return _no("rotation of infinite order")
        a = r.turn * k
        if a.denominator != 1:
            return _no(f"order {r.order} does not divide {k}")
        return Membership(True, int(a) % k, ())

    if not r.is_gaussian:
        return _no("not a Gaussian-rational rotation")
    vec, prime = G._vector(r)
    if vec is None:
        return _no(f"prime {prime} does not occur in the group")
    free = []
    for col, row in G._rows:
        q, rem = divmod(vec[col], row[col])
        if rem:
            return _no(
                f"exponent {vec[col]} of prime {G.primes[col]} is not a multiple "
                f"of {row[col]}"
            )
        vec = [v - q * w for v, w in zip(vec, row)]
        free.append(q)
    if any(vec[:-1]):
        return _no("prime exponents outside the group lattice")
    step = 4 // k
    a = vec[-1] % 4
    if a % step:
        return _no(f"unit i^{a} is not in the torsion part Z_{k}")
    return Membership(True, a // step, free)


def _contains(G, H):
    return all(member(G, h) for h in H.basis())


def _index(outer, inner):
    from sympy import Matrix

    if outer.rank != inner.rank:
        return None
    if outer.rank == 0:
        return outer.torsion_order // inner.torsion_order
    coords = []
    for h in inner.free_basis:
        m = member(outer, h)
        coords.append(list(m.free) + [m.torsion])
    coords.append([0] * outer.rank + [outer.torsion_order // inner.torsion_order])
    return abs(int(Matrix(coords).det()))


def subgroup_relation(G, H):
    """
    Containment and index between two rotation groups.

    Returns
    -------
    SubgroupRelation

    Examples
    --------
    .. doctest::

        >>> from subtile.groups import UnitRotation, subgroup_from_generators
        >>> from subtile.groups import subgroup_relation
        >>> i = UnitRotation.of(0, 1)
        >>> G = subgroup_from_generators([i, UnitRotation.of("3/5", "4/5")])
        >>> H = subgroup_from_generators([i, UnitRotation.of("-7/25", "24/25")])
        >>> subgroup_relation(G, H)
        SubgroupRelation(relation='index', index=2, inner='second')
    """
    h_in_g = _contains(G, H)
    g_in_h = _contains(H, G)
    if h_in_g and g_in_h:
        return SubgroupRelation("equal", 1, None)
    if not (h_in_g or g_in_h):
        return SubgroupRelation("incomparable", None, None)
    outer, inner, name = (G, H, "second") if h_in_g else (H, G, "first")
    index = _index(outer, inner)
    if index is None:
        return SubgroupRelation("infinite index", None, name)
    return SubgroupRelation("index", index, name)


def abstract_type(G):
    """The pair ``(k, r)`` with ``G ≅ Z_k ⊕ Zʳ``."""
    return (G.torsion_order, G.rank)


def g_rel_descriptor(G):
    """
    Rotations in the closure of ``G``, joined with all translations: ``Z_k`` for a
    finite group, all of SO(2) when ``G`` has an element of infinite order.
    """
    if G.rank == 0:
        return GRelDescriptor("cyclic", G.torsion_order, True)
    return GRelDescriptor("SO(2)", None, True)
