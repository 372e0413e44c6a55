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

import timeit

import numpy
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from ldgplates.solver import kkt_solver_base
from ldgplates.utils import logging

DEFAULT_MAX_ITERATIONS = 5000
RELATIVE_TOLERANCE = 1e-12


class MinresKKTSolver(kkt_solver_base.KKTSolverBase):
    """MINRES on the reduced saddle matrix.

    Preconditioned by the SPD block diagonal ``diag(1 / A_jj, 1 / d_i)`` with
    ``d_i = sum_j C_ij^2 / A_jj``.

    :param max_iterations: Iteration cap.
    """

    def __init__(self, max_iterations=DEFAULT_MAX_ITERATIONS):
        kkt_solver_base.KKTSolverBase.__init__(self)
        if max_iterations < 1:
            raise ValueError('max_iterations must be positive: %d' % max_iterations)
        self._max_iterations = max_iterations

    def get_max_iterations(self):
        return self._max_iterations

    def _preconditioner(self):
        diagonal = abs(self._system.get_matrix().diagonal())
        diagonal[diagonal == 0.0] = 1.0
        reduced = self._system.get_reduced_constraints()
        schur = reduced.multiply(reduced) @ (1.0 / diagonal)
        schur = numpy.asarray(schur).ravel()
        schur[schur == 0.0] = 1.0
        return sparse.diags(1.0 / numpy.concatenate([diagonal, schur]))

    def solve(self, rhs, constraint_rhs=None):
        rhs, reduced_rhs = self._prepare(rhs, constraint_rhs)
        system = self._system
        n = system.get_num_primal()
        start = timeit.default_timer()
        matrix = system.kkt_matrix().tocsr()
        full_rhs = numpy.concatenate([rhs, reduced_rhs])
        history = []

        def record(xk):
            history.append(float(numpy.linalg.norm(full_rhs - matrix @ xk)))

        x, info = sparse_linalg.minres(matrix, full_rhs, M=self._preconditioner(),
                                       rtol=RELATIVE_TOLERANCE,
                                       maxiter=self._max_iterations, callback=record)
        if info < 0:
            raise kkt_solver_base.ConvergenceError(history, 'MINRES breakdown (%d)' % info)
        solution = self._finish(x[:n], x[n:], rhs, reduced_rhs, history=history)
        if solution.get_residual() > kkt_solver_base.KKT_TOLERANCE:
            raise kkt_solver_base.ConvergenceError(
                history, 'MINRES residuals %g, %g exceed %g after %d iteration(s)'
                % (solution.primal_residual, solution.constraint_residual,
                   kkt_solver_base.KKT_TOLERANCE, len(history)))
        logging.debug('MINRES converged in %d iteration(s), %f second(s)', len(history),
                      timeit.default_timer() - start)
        return solution
