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

from ldgplates.parameters import parameters_pb2
from ldgplates.solver.sparse_symmetric import INDEFINITE
from ldgplates.solver.sparse_symmetric import SPD
from ldgplates.solver.sparse_symmetric import SparseSymmetric
from ldgplates.solver.linear import Error
from ldgplates.solver.linear import NonPositivePivotError
from ldgplates.solver.linear import factorize_spd
from ldgplates.solver.linear import solve_spd
from ldgplates.solver.saddle_system import SaddleSystem
from ldgplates.solver.kkt_solver_base import ConvergenceError
from ldgplates.solver.kkt_solver_base import IndefiniteBlockError
from ldgplates.solver.kkt_solver_base import KKTSolution
from ldgplates.solver.kkt_solver_base import SingularSystemError
from ldgplates.solver.direct_kkt_solver import DirectKKTSolver
from ldgplates.solver.minres_kkt_solver import MinresKKTSolver
from ldgplates.solver.singular_values import smallest_generalized_singular_value
from ldgplates.solver.dump import dump_matrix
from ldgplates.solver.dump import load_matrix

# Sync KKT solver IDs.
DIRECT_ID = parameters_pb2.DIRECT
MINRES_ID = parameters_pb2.MINRES

_SOLVERS_TABLE = {
    DIRECT_ID: DirectKKTSolver,
    MINRES_ID: MinresKKTSolver,
}


def get_default_solver_id():
    return DIRECT_ID


def get_instance_of(solver_id, *args, **kwargs):
    '''Returns an instance of the KKT solver defined by `solver_id`, or `None`
    otherwise.
    '''
    if not isinstance(solver_id, int):
        raise TypeError()
    if not solver_id in _SOLVERS_TABLE:
        return None
    solver_class = _SOLVERS_TABLE[solver_id]
    return solver_class(*args, **kwargs)


def solve_kkt(system, rhs, constraint_rhs=None, solver_id=DIRECT_ID, **kwargs):
    '''Solves a :class:`SaddleSystem` with the solver defined by `solver_id`.

    :returns: A :class:`KKTSolution`.
    '''
    solver = get_instance_of(solver_id, **kwargs)
    if solver is None:
        raise Error('Unknown KKT solver: %d' % solver_id)
    solver.load_system(system)
    return solver.solve(rhs, constraint_rhs)
