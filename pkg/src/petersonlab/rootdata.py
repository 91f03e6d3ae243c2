"""Root-datum combinatorics: roots, coroots, weights, Weyl words.

Conventions
-----------
Indices are 0-based internally; CLI/JSON surfaces use 1-based node names.

A Cartan matrix is given in catalog convention: ``cartan[i][j]`` is the
pairing of the j-th simple root against the i-th simple coroot, so row i
lists the values of alpha_i^vee on the simple roots.  Internally we keep
``pairing[i][j] = <alpha_i, alpha_j^vee>`` (the transpose), and:

* a root written in simple-root coordinates ``k`` pairs with alpha_j^vee
  as ``sum_i k[i] * pairing[i][j]``;
* alpha_i in fundamental-weight coordinates is row i of ``pairing``;
* alpha_j^vee in fundamental-coweight coordinates is column j of
  ``pairing``;
* weights are stored in fundamental-weight coordinates, coweights in
  fundamental-coweight coordinates, so <w_i, alpha_j^vee> = delta_ij is
  structural.

Node ordering for the built-in catalog is Bourbaki.
"""

from dataclasses import dataclass
from fractions import Fraction
import json

from . import linalg

HEIGHT_BOUND = 100

CATALOG = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "G2": [[2, -3], [-1, 2]],
    "A1xA1": [[2, 0], [0, 2]],
    "A2xA1": [[2, -1, 0], [-1, 2, 0], [0, 0, 2]],
}

ORDERING = "bourbaki"


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix in catalog convention (see module docstring)."""

    entries: tuple

    @property
    def n(self):
        return len(self.entries)

    def validate(self):
        n = self.n
        for i in range(n):
            if len(self.entries[i]) != n:
                raise ValueError("Cartan matrix must be square")
            if self.entries[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if self.entries[i][j] > 0:
                        raise ValueError("off-diagonal entries must be <= 0")
                    if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")
        if linalg.det(linalg.frac_matrix(self.entries)) == 0:
            raise ValueError("Cartan matrix must be nonsingular (semisimple)")


def cartan_from_entries(rows):
    cm = CartanMatrix(tuple(tuple(int(v) for v in row) for row in rows))
    cm.validate()
    return cm


def cartan_from_json(text):
    data = json.loads(text)
    return cartan_from_entries(data["cartan"])


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanMatrix
    pairing: tuple            # pairing[i][j] = <alpha_i, alpha_j^vee>
    positive_roots: tuple     # simple-root coordinates, sorted by height
    heights: tuple

    @property
    def n(self):
        return self.cartan.n

    # -- pairings -----------------------------------------------------
    def root_pair_coroot(self, root, j):
        """<alpha, alpha_j^vee> for alpha in simple-root coordinates."""
        return sum(root[i] * self.pairing[i][j] for i in range(self.n))

    def weight_coords(self, i):
        """alpha_i in fundamental-weight coordinates (row i of pairing)."""
        return tuple(self.pairing[i])

    def coroot_coords(self, j):
        """alpha_j^vee in fundamental-coweight coordinates (column j)."""
        return tuple(self.pairing[i][j] for i in range(self.n))

    def root_to_weight_coords(self, root):
        """Convert simple-root coordinates to fundamental-weight coords."""
        return tuple(sum(root[i] * self.pairing[i][j] for i in range(self.n))
                     for j in range(self.n))

    # -- inverse pairing and derived data -----------------------------
    def pairing_inverse(self):
        """Rows give fundamental weights in simple-root coordinates."""
        return linalg.inverse(linalg.frac_matrix(self.pairing))

    def weight_to_root_coords(self, weight):
        """Fundamental-weight coords -> simple-root coords (rational)."""
        pinv = self.pairing_inverse()
        return tuple(sum(Fraction(weight[i]) * pinv[i][j] for i in range(self.n))
                     for j in range(self.n))

    def coweight_pairing(self, weight, i):
        """<weight, w_i^vee> for weight in fundamental-weight coords."""
        return self.weight_to_root_coords(weight)[i]

    def symmetrizer(self):
        """Positive integers d with d[i]*pairing[i][j] == d[j]*pairing[j][i]."""
        n = self.n
        d = [None] * n
        for block in dynkin_components(self):
            d[block[0]] = Fraction(1)
            queue = [block[0]]
            while queue:
                i = queue.pop()
                for j in block:
                    if d[j] is None and self.pairing[i][j] != 0:
                        d[j] = d[i] * self.pairing[j][i] / self.pairing[i][j]
                        queue.append(j)
        denom = linalg.lcm([v.denominator for v in d])
        ints = [int(v * denom) for v in d]
        from math import gcd
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]

    def pair_weight_with_coroot_of(self, weight, root):
        """<weight, alpha^vee> for a (possibly non-simple) root alpha."""
        d = self.symmetrizer()
        k = root
        norm2 = sum(k[i] * k[j] * self.pairing[i][j] * d[j]
                    for i in range(self.n) for j in range(self.n))
        dot = 2 * sum(Fraction(weight[j]) * k[j] * d[j] for j in range(self.n))
        return dot / norm2

    def coroot_of(self, root):
        """alpha^vee in simple-coroot coordinates for a positive root alpha."""
        d = self.symmetrizer()
        norm2 = sum(root[i] * root[j] * self.pairing[i][j] * d[j]
                    for i in range(self.n) for j in range(self.n))
        return tuple(Fraction(2 * root[j] * d[j], 1) / norm2 for j in range(self.n))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word plus its root-lattice matrix.

    Elements are compared through the action matrix, never by word.
    """

    word: tuple
    matrix: tuple   # action on simple-root coordinates, columns = images

    @property
    def length(self):
        return len(self.word)

    def act_on_root(self, root):
        n = len(self.matrix)
        return tuple(sum(self.matrix[i][j] * root[j] for j in range(n))
                     for i in range(n))

    def act_on_weight(self, datum, weight):
        """Action on fundamental-weight coordinates."""
        w = [Fraction(v) for v in weight]
        for i in reversed(self.word):
            c = w[i]
            row = datum.pairing[i]
            w = [w[j] - c * row[j] for j in range(datum.n)]
        return tuple(w)


def _reflection_matrix(datum, i):
    """Matrix of s_i on simple-root coordinates: s_i(a_j) = a_j - <a_j,a_i^vee> a_i."""
    n = datum.n
    m = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    for j in range(n):
        m[i][j] -= datum.pairing[j][i]
    return m


def weyl_from_word(datum, word):
    n = datum.n
    mat = linalg.identity(n)
    for i in word:
        mat = linalg.mat_mul(_reflection_matrix(datum, i), mat)
    return WeylElement(tuple(word), tuple(tuple(row) for row in mat))


def build_root_datum(cartan):
    """Enumerate positive roots by reflection closure, sorted by height."""
    cartan.validate()
    n = cartan.n
    pairing = tuple(tuple(cartan.entries[j][i] for j in range(n)) for i in range(n))
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for j in range(n):
                c = sum(root[i] * pairing[i][j] for i in range(n))
                img = list(root)
                img[j] -= c
                img = tuple(img)
                if all(v >= 0 for v in img) and img not in seen:
                    if sum(img) > HEIGHT_BOUND:
                        raise ValueError(
                            "root closure exceeded height bound %d; "
                            "matrix is not of finite type" % HEIGHT_BOUND)
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), r))
    return RootDatum(
        cartan=cartan,
        pairing=pairing,
        positive_roots=tuple(roots),
        heights=tuple(sum(r) for r in roots),
    )


def datum_from_name(name):
    if name not in CATALOG:
        raise KeyError("unknown catalog type %r (known: %s)"
                       % (name, ", ".join(sorted(CATALOG))))
    return build_root_datum(cartan_from_entries(CATALOG[name]))


def longest_element(datum, J):
    """Longest element of the parabolic subgroup generated by J."""
    J = sorted(set(J))
    mu = [Fraction(1) if i in J else Fraction(0) for i in range(datum.n)]
    word = []
    while True:
        i = next((i for i in J if mu[i] > 0), None)
        if i is None:
            break
        word.append(i)
        c = mu[i]
        row = datum.pairing[i]
        mu = [mu[j] - c * row[j] for j in range(datum.n)]
    word.reverse()
    return weyl_from_word(datum, word)


def involution_star(datum):
    """Permutation i -> i* with w_0(alpha_i) = -alpha_{i*}."""
    w0 = longest_element(datum, range(datum.n))
    star = []
    for i in range(datum.n):
        img = w0.act_on_root(tuple(1 if j == i else 0 for j in range(datum.n)))
        neg = tuple(-v for v in img)
        target = next(k for k in range(datum.n)
                      if neg == tuple(1 if j == k else 0 for j in range(datum.n)))
        star.append(target)
    return tuple(star)


def dynkin_components(datum):
    """Connected components of the Dynkin graph, as sorted index lists."""
    n = datum.n
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        block = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            block.append(i)
            for j in range(n):
                if not seen[j] and i != j and datum.pairing[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(block))
    return blocks


def fundamental_exponents(datum):
    """m_i = least positive integer with m_i * w_i in the root lattice."""
    pinv = datum.pairing_inverse()
    return tuple(linalg.lcm([v.denominator for v in pinv[i]])
                 for i in range(datum.n))


def positive_roots_supported_on(datum, J):
    J = set(J)
    return [r for r in datum.positive_roots
            if all(r[i] == 0 for i in range(datum.n) if i not in J)]


def rho(datum):
    return tuple(1 for _ in range(datum.n))
