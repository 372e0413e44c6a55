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

import numpy

from ldgplates.solver import linear
from ldgplates.solver import saddle_system

KKT_TOLERANCE = 1e-9


class SingularSystemError(linear.Error):

    def __init__(self, smallest_singular_value, message=None):
        linear.Error.__init__(self, message or 'Singular KKT system: smallest pivot %g'
                              % smallest_singular_value)
        self.smallest_singular_value = smallest_singular_value


class IndefiniteBlockError(linear.Error):

    def __init__(self, index, pivot):
        linear.Error.__init__(self, 'Primal block is not SPD: pivot %g at index %d'
                              % (pivot, index))
        self.index = index
        self.pivot = pivot


class ConvergenceError(linear.Error):

    def __init__(self, history, message=None):
        linear.Error.__init__(self, message or 'Iterative KKT solve did not converge after '
                              '%d iteration(s)' % len(history))
        self.history = list(history)


class KKTSolution(object):
    """Primal and multiplier parts of a solved saddle system with its report."""

    def __init__(self, primal, multiplier, deficiency=0, primal_residual=0.0,
                 constraint_residual=0.0, smallest_pivot=None, history=None):
        self.primal = primal
        self.multiplier = multiplier
        self.deficiency = deficiency
        self.primal_residual = primal_residual
        self.constraint_residual = constraint_residual
        self.smallest_pivot = smallest_pivot
        self.history = history or []

    def get_residual(self):
        return max(self.primal_residual, self.constraint_residual)

    def __str__(self):
        return '%s[n=%d, m=%d, deficiency=%d, residual=%g]' % (
            self.__class__.__name__, len(self.primal), len(self.multiplier),
            self.deficiency, self.get_residual())


def kkt_residuals(system, primal, reduced_multiplier, rhs, reduced_rhs):
    '''Returns the residuals of both block equations.

    Each block residual is divided by the normwise scale of the whole system,
    ``||K||_inf ||(x, nu)|| + ||(rhs, g)||``.
    '''
    matrix = system.get_matrix().to_csc()
    reduced = system.get_reduced_constraints()
    primal_residual = matrix @ primal + reduced.T @ reduced_multiplier - rhs
    constraint_residual = reduced @ primal - reduced_rhs
    kkt = system.kkt_matrix()
    norm_inf = float(abs(kkt).sum(axis=1).max()) if kkt.nnz else 0.0
    scale = (norm_inf * numpy.linalg.norm(numpy.concatenate([primal, reduced_multiplier])) +
             numpy.linalg.norm(numpy.concatenate([rhs, reduced_rhs])))
    norms = numpy.linalg.norm(primal_residual), numpy.linalg.norm(constraint_residual)
    if scale == 0.0:
        return tuple(0.0 if norm == 0.0 else numpy.inf for norm in norms)
    return tuple(norm / scale for norm in norms)


class KKTSolverBase(object):
    """Base class of the saddle system solvers."""

    def __init__(self):
        self._system = None
        self._solution = None

    def load_system(self, system):
        '''Loads the system to the solver.

        :param system: A :class:`~ldgplates.solver.saddle_system.SaddleSystem`.
        '''
        if not isinstance(system, saddle_system.SaddleSystem):
            raise TypeError('system must be a SaddleSystem: %s' % type(system))
        self._system = system
        self._solution = None

    def get_system(self):
        return self._system

    def get_solution(self):
        return self._solution

    def _prepare(self, rhs, constraint_rhs):
        if self._system is None:
            raise linear.Error('No system loaded')
        rhs = numpy.asarray(rhs, dtype=float)
        if rhs.shape != (self._system.get_num_primal(),):
            raise ValueError('Right-hand side has shape %s, expected (%d,)'
                             % (rhs.shape, self._system.get_num_primal()))
        if constraint_rhs is None:
            constraint_rhs = numpy.zeros(self._system.get_num_constraints())
        return rhs, self._system.reduce_rhs(constraint_rhs)

    def _finish(self, primal, reduced_multiplier, rhs, reduced_rhs, **kwargs):
        primal_residual, constraint_residual = kkt_residuals(
            self._system, primal, reduced_multiplier, rhs, reduced_rhs)
        self._solution = KKTSolution(
            primal, self._system.expand_multiplier(reduced_multiplier),
            deficiency=self._system.get_deficiency(), primal_residual=primal_residual,
            constraint_residual=constraint_residual, **kwargs)
        return self._solution

    def solve(self, rhs, constraint_rhs=None):
        '''Solves ``A x + B^T lambda = rhs``, ``B x = constraint_rhs``.

        :returns: A :class:`KKTSolution`.
        '''
        raise NotImplementedError()
