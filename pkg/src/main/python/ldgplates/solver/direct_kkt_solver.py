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
from scipy.sparse import linalg as sparse_linalg

from ldgplates.solver import kkt_solver_base
from ldgplates.solver import linear
from ldgplates.utils import logging

SINGULAR_PIVOT_RATIO = 1e-14


class DirectKKTSolver(kkt_solver_base.KKTSolverBase):
    """Sparse LU of the reduced saddle matrix with iterative refinement.

    The column ordering is a deterministic minimum degree ordering of the
    symmetric pattern, so repeated solves give identical results.
    """

    def _check_primal_block(self):
        try:
            return linear.factorize_spd(self._system.get_matrix())
        except linear.NonPositivePivotError as e:
            raise kkt_solver_base.IndefiniteBlockError(e.index, e.pivot)
        except linear.Error:
            raise kkt_solver_base.SingularSystemError(0.0)

    def solve(self, rhs, constraint_rhs=None):
        rhs, reduced_rhs = self._prepare(rhs, constraint_rhs)
        system = self._system
        start = timeit.default_timer()
        lu = self._check_primal_block() if system.is_spd() else None
        n = system.get_num_primal()
        if not system.get_num_reduced_constraints() and lu is not None:
            primal = linear.solve_spd(system.get_matrix(), rhs, lu=lu)
            return self._finish(primal, numpy.zeros(0), rhs, reduced_rhs,
                                smallest_pivot=float(lu.U.diagonal().min()))
        matrix = system.kkt_matrix()
        try:
            lu = sparse_linalg.splu(matrix, permc_spec='MMD_AT_PLUS_A',
                                    options=dict(SymmetricMode=True))
        except RuntimeError as e:
            logging.debug('KKT factorization failed: %s', e)
            raise kkt_solver_base.SingularSystemError(0.0)
        pivots = abs(lu.U.diagonal())
        smallest = float(pivots.min())
        if smallest <= SINGULAR_PIVOT_RATIO * pivots.max():
            raise kkt_solver_base.SingularSystemError(smallest)
        full_rhs = numpy.concatenate([rhs, reduced_rhs])
        x = lu.solve(full_rhs)
        for _ in range(linear.MAX_REFINEMENTS):
            residual = full_rhs - matrix @ x
            if (numpy.linalg.norm(residual) <=
                    linear.RESIDUAL_TOLERANCE * numpy.linalg.norm(abs(matrix) @ abs(x))):
                break
            x = x + lu.solve(residual)
        solution = self._finish(x[:n], x[n:], rhs, reduced_rhs, smallest_pivot=smallest)
        if solution.get_residual() > kkt_solver_base.KKT_TOLERANCE:
            raise kkt_solver_base.SingularSystemError(
                smallest, 'KKT residuals %g, %g exceed %g (smallest pivot %g)'
                % (solution.primal_residual, solution.constraint_residual,
                   kkt_solver_base.KKT_TOLERANCE, smallest))
        logging.debug('Solved KKT system n=%d, m=%d in %f second(s)', n,
                      system.get_num_reduced_constraints(), timeit.default_timer() - start)
        return solution
