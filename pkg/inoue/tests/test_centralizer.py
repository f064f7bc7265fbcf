# Licensed under a 3-clause BSD style license - see LICENSE.rst
import itertools
from math import gcd

import pytest

from inoue import (DegenerateDiscriminantError, InadmissibleError, NotCommutingError,
                   NotUnimodularError)
from inoue.centralizer import (centralizer_lattice, expanding_eigenvalue,
                               expanding_eigenvector, eigenvalue_on,
                               positive_centralizer_generator, power_expand,
                               unit_minimality_witness)
from inoue.exact_arith import QuadElem
from inoue.intmat import IMat


N0 = IMat([[1, 1], [1, 2]])
N1 = IMat([[1, 2], [1, 3]])
I2 = IMat.identity(2)


def unimodular_matrices(trace, det, bound=6):
    for a in range(-bound, bound + 1):
        bc = a * (trace - a) - det
        for b in range(-bound, bound + 1):
            if b and bc % b == 0 and abs(bc // b) <= bound:
                yield IMat([[a, b], [bc // b, trace - a]])


class TestLattice:
    @pytest.mark.parametrize('N, g, B', [
        (N0, 1, [[0, 1], [1, 1]]),
        (N1, 1, [[0, 2], [1, 2]]),
        (IMat([[0, 2], [2, 5]]), 1, [[0, 2], [2, 5]]),
        (N0 @ N0, 3, [[0, 1], [1, 1]])])
    def test_examples(self, N, g, B):
        lattice = centralizer_lattice(N)
        assert lattice.g == g
        assert lattice.B == IMat(B)
        assert lattice.basis[0] == I2
        assert lattice.B @ N == N @ lattice.B

    @pytest.mark.parametrize('N', [N0, N1, N0 @ N0, IMat([[0, 1], [1, 3]])])
    def test_complete(self, N):
        B = centralizer_lattice(N).B
        for entries in itertools.product(range(-4, 5), repeat=4):
            M = IMat([entries[:2], entries[2:]])
            if M @ N != N @ M:
                continue
            y = M[0, 0]
            rest = (M - I2 * y).tolist()
            x = rest[1][0] // B[1, 0]
            assert M == B * x + I2 * y

    def test_degenerate(self):
        with pytest.raises(DegenerateDiscriminantError):
            centralizer_lattice(IMat([[0, 2], [2, 3]]))


class TestEigen:
    def test_expanding(self):
        alpha = expanding_eigenvalue(N0)
        assert alpha == QuadElem('3/2', '1/2', 5)
        a = expanding_eigenvector(N0)
        assert N0.apply(a) == tuple(alpha * x for x in a)
        assert eigenvalue_on(N0, a) == alpha

    def test_det_minus_one(self):
        N = IMat([[0, 1], [1, 1]])
        alpha = expanding_eigenvalue(N)
        assert alpha == QuadElem('1/2', '1/2', 5)
        assert alpha * alpha == alpha + 1

    def test_not_eigenvector(self):
        with pytest.raises(NotCommutingError):
            eigenvalue_on(N1, expanding_eigenvector(N0))


class TestPositiveCentralizer:
    def test_theta3(self):
        gen = positive_centralizer_generator(N0)
        assert gen.K == IMat([[0, 1], [1, 1]])
        assert gen.eps == -1
        assert gen.K ** 2 == N0
        assert gen.power_to_N == 2

    def test_theta4(self):
        gen = positive_centralizer_generator(N1)
        assert gen.K == N1
        assert gen.eps == 1
        assert gen.power_to_N == 1
        assert gen.theta_eig == QuadElem(2, 1, 3)

    def test_transpose_theta3(self):
        N = IMat([[2, 1], [1, 1]])
        gen = positive_centralizer_generator(N)
        assert gen.K == IMat([[1, 1], [1, 0]])
        assert gen.eps == -1
        assert gen.K ** 2 == N
        assert unit_minimality_witness(N, gen, limit=100) == []

    def test_imprimitive(self):
        # gcd(n12, n21, n22 - n11) = 3: outside the primitive case, the
        # generator is a fourth root.
        N = N0 @ N0
        gen = positive_centralizer_generator(N)
        assert gen.K == IMat([[0, 1], [1, 1]])
        assert gen.power_to_N == 4

    @pytest.mark.parametrize('N', [IMat([[0, 1], [1, 1]]), IMat([[0, 1], [1, 3]]),
                                   IMat([[1, 2], [2, 3]])])
    def test_det_minus_one(self, N):
        gen = positive_centralizer_generator(N)
        assert gen.K @ N == N @ gen.K
        assert gen.theta_eig > 1
        assert gen.K ** gen.power_to_N == N
        assert unit_minimality_witness(N, gen, limit=200) == []

    def test_properties(self):
        for N in (N0, N1, IMat([[2, 3], [5, 8]]), IMat([[1, 3], [2, 7]])):
            gen = positive_centralizer_generator(N)
            K = gen.K
            assert K @ N == N @ K
            assert K.det() == gen.eps
            assert gen.theta_eig > 1
            a = expanding_eigenvector(N)
            assert eigenvalue_on(K, a) == gen.theta_eig
            for m in range(1, 7):
                assert eigenvalue_on(K ** m, a) == gen.theta_eig ** m
            values = [eigenvalue_on(K ** i, a) for i in range(-3, 4)]
            assert len(set(values)) == len(values)

    def test_minimal(self):
        gen = positive_centralizer_generator(N0)
        assert unit_minimality_witness(N0, gen) == []

    @pytest.mark.parametrize('theta', range(3, 9))
    def test_primitive_det_one(self, theta):
        # gcd 1 and det 1: the generator is N for θ > 3, a square root of
        # determinant -1 for θ = 3.
        count = 0
        for N in unimodular_matrices(theta, 1):
            (n11, n12), (n21, n22) = N.tolist()
            if gcd(gcd(n12, n21), n22 - n11) != 1:
                continue
            gen = positive_centralizer_generator(N)
            if theta > 3:
                assert gen.K == N and gen.eps == 1
            else:
                assert gen.K ** 2 == N and gen.eps == -1
            count += 1
        assert count > 0

    def test_errors(self):
        with pytest.raises(NotUnimodularError):
            positive_centralizer_generator(IMat([[1, 1], [1, 5]]))
        with pytest.raises(InadmissibleError):
            positive_centralizer_generator(IMat([[-1, -1], [-1, -2]]))
        with pytest.raises(InadmissibleError):
            positive_centralizer_generator(IMat([[0, 1], [1, -1]]))
        with pytest.raises(DegenerateDiscriminantError):
            positive_centralizer_generator(IMat([[0, 2], [2, 3]]))


class TestPowerExpand:
    @pytest.mark.parametrize('k, expected', [(2, (3, -1)), (0, (0, 1)), (-1, (-1, 3)),
                                             (1, (1, 0))])
    def test_theta3(self, k, expected):
        assert power_expand(N0, k) == expected

    @pytest.mark.parametrize('N', [N0, N1, IMat([[0, 1], [1, 1]]), IMat([[1, 2], [2, 3]])])
    def test_identity(self, N):
        for k in range(-12, 13):
            a, b = power_expand(N, k)
            assert N ** k == N * a + I2 * b

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodularError):
            power_expand(IMat([[1, 1], [1, 5]]), 2)
