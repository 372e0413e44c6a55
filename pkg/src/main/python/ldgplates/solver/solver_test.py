# Copyright (c) 2013 The ldgplates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import io

import numpy
from scipy import sparse

from ldgplates import solver
from ldgplates.utils import unittest


class SparseSymmetricTest(unittest.TestCase):

    def test_lower_storage(self):
        matrix = numpy.array([[4.0, 1.0, 0.0], [1.0, 3.0, 2.0], [0.0, 2.0, 5.0]])
        symmetric = solver.SparseSymmetric(matrix)
        self.assert_equal(3, symmetric.get_dimension())
        self.assert_equal(5, symmetric.get_lower().nnz)
        self.assert_allclose(matrix, symmetric.to_csc().toarray())
        self.assert_almost_equal(7.0, symmetric.norm_inf())
        self.assert_true(symmetric.is_spd())

    def test_rejects_asymmetric(self):
        self.assert_raises(solver.Error, solver.SparseSymmetric, [[1.0, 2.0], [0.0, 1.0]])
        self.assert_raises(ValueError, solver.SparseSymmetric, numpy.ones((2, 3)))
        self.assert_raises(ValueError, solver.SparseSymmetric, numpy.eye(2), 'lower')


class SolveSPDTest(unittest.TestCase):

    def test_identity(self):
        rhs = numpy.array([1.0, -2.0, 3.0])
        self.assert_allclose(rhs, solver.solve_spd(sparse.identity(3), rhs))

    def test_hand_elimination(self):
        x = solver.solve_spd([[2.0, 1.0], [1.0, 2.0]], [1.0, 1.0])
        self.assert_allclose([1.0 / 3.0, 1.0 / 3.0], x, rtol=1e-14)

    def test_random_spd(self):
        rng = numpy.random.default_rng(3)
        a = rng.standard_normal((50, 50))
        matrix = a.T @ a + numpy.eye(50)
        rhs = rng.standard_normal(50)
        x = solver.solve_spd(matrix, rhs)
        norm_inf = abs(matrix).sum(axis=1).max()
        residual = numpy.linalg.norm(matrix @ x - rhs)
        self.assert_less_equal(residual, 1e-10 * (norm_inf * numpy.linalg.norm(x) +
                                                  numpy.linalg.norm(rhs)))

    def test_multiple_right_hand_sides(self):
        matrix = sparse.diags([2.0, 4.0])
        x = solver.solve_spd(matrix, numpy.array([[2.0, 4.0], [4.0, 8.0]]))
        self.assert_allclose([[1.0, 2.0], [1.0, 2.0]], x)

    def test_deterministic(self):
        rng = numpy.random.default_rng(7)
        a = sparse.random(40, 40, density=0.1, random_state=7)
        matrix = a.T @ a + sparse.identity(40)
        rhs = rng.standard_normal(40)
        self.assert_array_equal(solver.solve_spd(matrix, rhs), solver.solve_spd(matrix, rhs))

    def test_non_positive_pivot(self):
        matrix = numpy.diag([1.0, 2.0, -1.0, 3.0])
        with self.assert_raises(solver.NonPositivePivotError) as context:
            solver.solve_spd(matrix, numpy.ones(4))
        self.assert_equal(2, context.exception.index)

    def test_errors(self):
        self.assert_raises(ValueError, solver.solve_spd, numpy.eye(2), numpy.ones(3))
        indefinite = solver.SparseSymmetric(numpy.eye(2), solver.INDEFINITE)
        self.assert_raises(solver.Error, solver.solve_spd, indefinite, numpy.ones(2))


class KKTTest(unittest.TestCase):

    def test_no_constraints(self):
        system = solver.SaddleSystem([[2.0, 1.0], [1.0, 2.0]], None)
        solution = solver.solve_kkt(system, numpy.array([1.0, 1.0]))
        self.assert_allclose([1.0 / 3.0, 1.0 / 3.0], solution.primal, rtol=1e-14)
        self.assert_equal(0, len(solution.multiplier))
        self.assert_equal(0, solution.deficiency)

    def test_single_constraint(self):
        for solver_id in (solver.DIRECT_ID, solver.MINRES_ID):
            system = solver.SaddleSystem(numpy.eye(2), [[1.0, 1.0]])
            solution = solver.solve_kkt(system, numpy.array([1.0, 1.0]), solver_id=solver_id)
            self.assert_allclose([0.0, 0.0], solution.primal, atol=1e-12)
            self.assert_allclose([1.0], solution.multiplier, rtol=1e-10)
            self.assert_less_equal(solution.primal_residual, 1e-9)
            self.assert_less_equal(solution.constraint_residual, 1e-9)

    def test_duplicated_row(self):
        single = solver.solve_kkt(solver.SaddleSystem(numpy.eye(2), [[1.0, 1.0]]),
                                  numpy.array([3.0, 1.0]))
        system = solver.SaddleSystem(numpy.eye(2), [[1.0, 1.0], [1.0, 1.0]])
        self.assert_equal(1, system.get_deficiency())
        self.assert_equal(1, system.get_num_reduced_constraints())
        double = solver.solve_kkt(system, numpy.array([3.0, 1.0]))
        self.assert_equal(1, double.deficiency)
        self.assert_allclose(single.primal, double.primal, atol=1e-14)
        self.assert_allclose([1.0, -1.0], double.primal, atol=1e-12)
        # Minimum norm split of the single multiplier.
        self.assert_allclose([1.0, 1.0], double.multiplier, rtol=1e-10)
        self.assert_allclose([2.0], single.multiplier, rtol=1e-10)

    def test_element_groups(self):
        constraints = sparse.csr_matrix(numpy.array([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]))
        system = solver.SaddleSystem(numpy.eye(4), constraints)
        self.assert_equal(2, len(system.get_row_groups()))
        self.assert_equal(3, system.get_deficiency())
        solution = solver.solve_kkt(system, numpy.ones(4), numpy.array([0.0, 0.0, 0.0,
                                                                         2.0, 0.0, 0.0]))
        self.assert_allclose([0.0, 0.0, 2.0, 1.0], solution.primal, atol=1e-12)
        self.assert_allclose(0.0, solution.multiplier[4:], atol=1e-14)

    def test_permuted_dofs(self):
        rng = numpy.random.default_rng(11)
        a = rng.standard_normal((12, 12))
        matrix = a.T @ a + numpy.eye(12)
        constraints = rng.standard_normal((6, 12))
        rhs = rng.standard_normal(12)
        permutation = rng.permutation(12)
        solution = solver.solve_kkt(solver.SaddleSystem(matrix, constraints), rhs)
        permuted = solver.solve_kkt(
            solver.SaddleSystem(matrix[numpy.ix_(permutation, permutation)],
                                constraints[:, permutation]), rhs[permutation])
        self.assert_allclose(solution.primal[permutation], permuted.primal, atol=1e-10)

    def test_minres_matches_direct(self):
        rng = numpy.random.default_rng(5)
        a = rng.standard_normal((15, 15))
        matrix = a.T @ a + numpy.eye(15)
        constraints = rng.standard_normal((3, 15))
        rhs = rng.standard_normal(15)
        direct = solver.solve_kkt(solver.SaddleSystem(matrix, constraints), rhs)
        minres = solver.solve_kkt(solver.SaddleSystem(matrix, constraints), rhs,
                                  solver_id=solver.MINRES_ID)
        self.assert_allclose(direct.primal, minres.primal, atol=1e-7)
        self.assert_greater(len(minres.history), 0)

    def test_minres_iteration_cap(self):
        rng = numpy.random.default_rng(5)
        a = rng.standard_normal((30, 30))
        matrix = a.T @ a + 1e-3 * numpy.eye(30)
        system = solver.SaddleSystem(matrix, rng.standard_normal((3, 30)))
        with self.assert_raises(solver.ConvergenceError) as context:
            solver.solve_kkt(system, rng.standard_normal(30), solver_id=solver.MINRES_ID,
                             max_iterations=1)
        self.assert_equal(1, len(context.exception.history))

    def test_indefinite_primal_block(self):
        system = solver.SaddleSystem(numpy.diag([1.0, -1.0]), [[1.0, 0.0]])
        self.assert_raises(solver.IndefiniteBlockError, solver.solve_kkt, system,
                           numpy.ones(2))

    def test_singular_system(self):
        system = solver.SaddleSystem(numpy.eye(3), [[1.0, 0.0, 0.0], [1.0, 0.0, 0.0]],
                                     row_groups=[[0], [1]])
        self.assert_equal(0, system.get_deficiency())
        with self.assert_raises(solver.SingularSystemError) as context:
            solver.solve_kkt(system, numpy.ones(3))
        self.assert_less(context.exception.smallest_singular_value, 1e-12)

    def test_registry(self):
        self.assert_is_none(solver.get_instance_of(42))
        self.assert_raises(TypeError, solver.get_instance_of, 'direct')
        self.assert_true(isinstance(solver.get_instance_of(solver.get_default_solver_id()),
                                    solver.DirectKKTSolver))
        self.assert_raises(TypeError, solver.DirectKKTSolver().load_system, numpy.eye(2))
        self.assert_raises(ValueError, solver.SaddleSystem, numpy.eye(2), numpy.ones((1, 3)))
        self.assert_raises(ValueError, solver.SaddleSystem, numpy.eye(2), numpy.ones((2, 2)),
                           row_groups=[[0]])


class SingularValueTest(unittest.TestCase):

    def test_identity(self):
        value = solver.smallest_generalized_singular_value(
            sparse.identity(4), sparse.identity(4), sparse.identity(4))
        self.assert_almost_equal(1.0, value, places=12)

    def test_zero_row(self):
        constraints = numpy.array([[1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
        value = solver.smallest_generalized_singular_value(
            constraints, sparse.identity(3), sparse.identity(2))
        self.assert_almost_equal(0.0, value, places=7)

    def test_random_against_sampling(self):
        rng = numpy.random.default_rng(2)
        constraints = rng.standard_normal((6, 12))
        value = solver.smallest_generalized_singular_value(
            constraints, sparse.identity(12), sparse.identity(6))
        expected = numpy.linalg.svd(constraints, compute_uv=False).min()
        self.assert_almost_equal(expected, value, places=10)
        samples = rng.standard_normal((20000, 6))
        samples /= numpy.linalg.norm(samples, axis=1)[:, None]
        ratios = numpy.linalg.norm(samples @ constraints, axis=1)
        self.assert_greater_equal(ratios.min(), value * (1.0 - 1e-12))

    def test_scaled_grams(self):
        constraints = numpy.array([[1.0, 0.0], [0.0, 1.0]])
        value = solver.smallest_generalized_singular_value(
            constraints, sparse.diags([4.0, 1.0]), sparse.diags([1.0, 9.0]))
        self.assert_almost_equal(1.0 / 3.0, value, places=12)

    def test_non_spd_gram(self):
        constraints = numpy.eye(2)
        self.assert_raises(solver.Error, solver.smallest_generalized_singular_value,
                           constraints, sparse.diags([1.0, -1.0]), sparse.identity(2))
        self.assert_raises(solver.Error, solver.smallest_generalized_singular_value,
                           constraints, sparse.identity(2), numpy.diag([1.0, -1.0]))


class DumpTest(unittest.TestCase):

    def test_triplets(self):
        matrix = sparse.csr_matrix(numpy.array([[0.0, 1.0 / 3.0], [2.0, 0.0]]))
        stream = io.StringIO()
        solver.dump_matrix(stream, matrix)
        self.assert_equal('0 1 0.33333333333333331\n1 0 2\n', stream.getvalue())
        loaded = solver.load_matrix(io.StringIO(stream.getvalue()), shape=(2, 2))
        self.assert_array_equal(matrix.toarray(), loaded.toarray())


if __name__ == '__main__':
    unittest.main()
