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

from ldgplates import solver
from ldgplates.dg import dg_field
from ldgplates.energy import bending
from ldgplates.flows import flow_config
from ldgplates.utils import logging


def bilaplacian_init(assembly, gamma0, gamma1, dirichlet, forcing=None):
    '''Discrete bi-Laplacian solution with Dirichlet data imposed by Nitsche
    jumps, used as initial guess of Dirichlet runs.

    Solves c_h(y, v) = (f, v) for all v, with c_h the Hessian product plus
    the jump penalties weighted by `gamma1` and `gamma0`.

    :param assembly: A :class:`~ldgplates.lifting.LiftingAssembly` whose
      skeleton includes the Dirichlet edges.
    :param dirichlet: Pair ``(phi, Phi)`` of boundary data callables.
    :param forcing: Optional callable ``(N, 2) -> (N, 3)``.
    :returns: A 3-component :class:`~ldgplates.dg.DGField`.
    '''
    if not assembly.get_skeleton().includes_dirichlet():
        raise flow_config.Error('bilaplacian_init needs Dirichlet edges')
    if gamma0 <= 0.0 or gamma1 <= 0.0:
        raise ValueError('Penalty parameters must be positive: %g, %g' % (gamma0, gamma1))
    start = timeit.default_timer()
    energy = bending.BendingEnergy.bilaplacian(assembly, gamma0, gamma1, dirichlet, forcing)
    matrix = energy.matrix()
    rhs = energy.load_vector() - energy.data_vector()
    try:
        coefficients = solver.solve_spd(
            solver.SparseSymmetric(0.5 * (matrix + matrix.T), solver.SPD), rhs.T).T
    except solver.Error as e:
        raise flow_config.Error('Bi-Laplacian solve failed: %s' % e)
    logging.info('Solved the bi-Laplacian problem in %f second(s)',
                 timeit.default_timer() - start)
    return dg_field.DGField(assembly.get_space(), coefficients)
