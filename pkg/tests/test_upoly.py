import random

from quivercert import GF, QQ, Matrix
from quivercert import upoly


def laplace_charpoly(field, m):
    """det(lambda I - m) by cofactor expansion over polynomials (oracle)."""
    n = m.rows
    entries = [[[field.neg(m[i, j])] if i != j else
                upoly.normalize(field, [field.neg(m[i, j]), field.one()])
                for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if not rows:
            return [field.one()]
        total = []
        i = rows[0]
        for pos, j in enumerate(cols):
            minor = det(rows[1:], cols[:pos] + cols[pos + 1:])
            term = upoly.mul(field, entries[i][j], minor)
            total = upoly.add(field, total, term) if pos % 2 == 0 else \
                upoly.sub(field, total, term)
        return total

    out = det(list(range(n)), list(range(n)))
    while len(out) < n + 1:
        out.append(field.zero())
    return out


def random_matrix(field, n, rng):
    if field.is_prime_field:
        return Matrix(field, n, n, [rng.randrange(field.p) for _ in range(n * n)])
    return Matrix(field, n, n, [field.from_int(rng.randrange(-3, 4)) for _ in range(n * n)])


def test_charpoly_matches_laplace():
    rng = random.Random(13)
    for field in (GF(2), GF(5), QQ):
        for n in (1, 2, 3, 4):
            for _ in range(4):
                m = random_matrix(field, n, rng)
                assert upoly.charpoly(m) == laplace_charpoly(field, m)


def test_charpoly_of_empty():
    assert upoly.charpoly(Matrix.zero(QQ, 0, 0)) == [QQ.one()]


def test_minpoly_divides_charpoly_and_annihilates():
    rng = random.Random(17)
    for field in (GF(3), QQ):
        for _ in range(6):
            m = random_matrix(field, 4, rng)
            mp = upoly.minpoly_matrix(m)
            cp = upoly.charpoly(m)
            _, rem = upoly.divmod_poly(field, cp, mp)
            assert rem == []
            assert upoly.eval_matrix(field, mp, m).is_zero()


def test_minpoly_of_identity():
    m = Matrix.identity(GF(7), 3)
    assert upoly.minpoly_matrix(m) == [GF(7).element(-1), GF(7).one()]


def test_factor_poly_over_f2():
    f2 = GF(2)
    # x^2 + 1 = (x + 1)^2 over F2
    facs = upoly.factor_poly(f2, [1, 0, 1])
    assert facs == [([1, 1], 2)]


def test_factor_poly_over_f5():
    f5 = GF(5)
    # x^2 + 1 = (x + 2)(x + 3) over F5
    facs = upoly.factor_poly(f5, [1, 0, 1])
    assert sorted(f[0] for f in facs) == [[2, 1], [3, 1]]
    assert all(m == 1 for _, m in facs)


def test_factor_poly_rational():
    assert upoly.is_irreducible(QQ, [QQ.element(1), QQ.element(0), QQ.element(1)])
    facs = upoly.factor_poly(QQ, [QQ.element(-1), QQ.element(0), QQ.element(1)])
    assert len(facs) == 2


def test_ext_gcd_bezout():
    f5 = GF(5)
    p = [1, 1]      # x + 1
    q = [2, 0, 1]   # x^2 + 2
    g, u, v = upoly.ext_gcd(f5, p, q)
    lhs = upoly.add(f5, upoly.mul(f5, u, p), upoly.mul(f5, v, q))
    assert lhs == g
    assert upoly.degree(g) == 0


def test_poly_division_round_trip():
    rng = random.Random(23)
    f3 = GF(3)
    for _ in range(10):
        p = upoly.normalize(f3, [rng.randrange(3) for _ in range(6)])
        q = upoly.normalize(f3, [rng.randrange(3) for _ in range(3)] + [1])
        quo, rem = upoly.divmod_poly(f3, p, q)
        back = upoly.add(f3, upoly.mul(f3, quo, q), rem)
        assert back == p
