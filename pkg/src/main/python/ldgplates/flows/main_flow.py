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

"""The main constrained H^2_h gradient flow.

Every step solves the saddle system

  tau^-1 (dy, v) + a_h(dy, v) + b_h(y_n; v, lambda) = -dE_h(y_n)(v),
  b_h(y_n; dy, mu) = 0,

with one symmetric 2x2 multiplier per element, and sets y_{n+1} = y_n + dy.
"""

import timeit

import numpy

from ldgplates import solver
from ldgplates.dg import dg_field
from ldgplates.dg import forms
from ldgplates.dg import inequalities
from ldgplates.energy import bending
from ldgplates.energy import defect
from ldgplates.flows import flow_config
from ldgplates.flows import infsup
from ldgplates.utils import logging

CONSTRAINT_TOLERANCE = 1e-9
ENERGY_SLACK = 1e-10


def energy_slack(energy):
    return ENERGY_SLACK * max(1.0, abs(energy))


class StepResult(object):
    """Increment, multiplier and solver report of one main flow step."""

    def __init__(self, increment, multiplier, solution, constraint_residual):
        self.increment = increment
        self.multiplier = multiplier
        self.solution = solution
        self.constraint_residual = constraint_residual

    def get_kkt_residual(self):
        return self.solution.get_residual()

    def get_deficiency(self):
        return self.solution.deficiency


class MainFlow(object):
    """Operators of the main flow for one energy and time-step.

    :param config: A :class:`~ldgplates.flows.FlowConfig`.
    :param energy: The :class:`~ldgplates.energy.BendingEnergy` E_h.
    """

    def __init__(self, config, energy):
        assembly = energy.get_assembly()
        if assembly.get_skeleton().includes_dirichlet() != config.is_dirichlet():
            raise flow_config.Error('Boundary mode %s does not match the skeleton %s'
                                    % (config.boundary_mode, assembly.get_skeleton()))
        self._config = config
        self._energy = energy
        self._assembly = assembly
        self._space = assembly.get_space()
        self._gram = infsup.flow_gram(assembly)
        matrix = self._gram / config.tau + energy.matrix()
        matrix = forms.replicate(0.5 * (matrix + matrix.T), bending.NUM_COMPONENTS)
        self._primal = solver.SparseSymmetric(matrix, solver.SPD)

    def get_config(self):
        return self._config

    def get_energy(self):
        return self._energy

    def get_gram(self):
        '''Scalar Gram matrix of the flow inner product.'''
        return self._gram

    def norm(self, field):
        return forms.quadratic_norm(self._gram, field)

    def step(self, y):
        '''Solves for the increment at `y`.

        :returns: A :class:`StepResult`.
        :raises: :exc:`~ldgplates.flows.KKTError`
        '''
        config = self._config
        rhs = -self._energy.gradient(y).ravel()
        constraints = defect.constraint_matrix(y)
        system = solver.SaddleSystem(self._primal, constraints)
        try:
            solution = solver.solve_kkt(system, rhs, solver_id=config.solver_id,
                                        **config.get_solver_options())
        except solver.SingularSystemError as e:
            raise flow_config.KKTError(str(e), smallest_singular_value=e.smallest_singular_value)
        except solver.ConvergenceError as e:
            raise flow_config.KKTError(str(e), history=e.history)
        except solver.Error as e:
            raise flow_config.KKTError(str(e))
        increment = dg_field.DGField(self._space,
                                     solution.primal.reshape(bending.NUM_COMPONENTS, -1))
        residual = defect.constraint_residual(y, increment, constraints)
        bound = CONSTRAINT_TOLERANCE * (1.0 + forms.gradient_norm(y) ** 2)
        if config.check_constraint and residual > bound:
            raise flow_config.KKTError('Linearized constraint residual %g exceeds %g'
                                       % (residual, bound))
        return StepResult(increment, defect.multiplier_tensor(solution.multiplier), solution,
                          residual)


def main_flow_step(config, energy, y_n):
    '''One step of the main flow from `y_n`; see :meth:`MainFlow.step`.'''
    return MainFlow(config, energy).step(y_n)


def element_projectors(constraints, space, num_components=bending.NUM_COMPONENTS):
    '''``(e, c nb, c nb)`` orthogonal projectors onto the kernels of the
    element blocks of the constraint matrix.
    '''
    ne = space.get_mesh().get_num_elements()
    nb = space.get_num_local_dofs()
    ndofs = space.get_num_dofs()
    projectors = numpy.empty((ne, num_components * nb, num_components * nb))
    local = numpy.arange(nb)
    for element in range(ne):
        columns = (numpy.arange(num_components)[:, None] * ndofs + element * nb
                   + local[None, :]).ravel()
        block = constraints[3 * element:3 * element + 3][:, columns].toarray()
        projectors[element] = (numpy.eye(num_components * nb)
                               - numpy.linalg.pinv(block) @ block)
    return projectors


def project_tangential(projectors, field):
    '''Projects `field` onto the linearized constraint set element by element.'''
    c = field.get_num_components()
    ne, size, _ = projectors.shape
    local = numpy.transpose(field.get_coefficients().reshape(c, ne, -1), (1, 0, 2))
    projected = numpy.einsum('eij,ej->ei', projectors, local.reshape(ne, size))
    coefficients = numpy.transpose(projected.reshape(ne, c, -1), (1, 0, 2)).reshape(c, -1)
    return dg_field.DGField(field.get_space(), coefficients)


def stationarity_residual(energy, y, gram, samples, seed=0):
    '''Largest sampled |dE_h(y)(v)| / ||v|| over increments v satisfying the
    linearized constraint at `y`.
    '''
    space = y.get_space()
    projectors = element_projectors(defect.constraint_matrix(y), space)
    gradient = energy.gradient(y)
    rng = numpy.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        v = project_tangential(projectors, inequalities.sample_smooth_field(
            space, rng, bending.NUM_COMPONENTS))
        norm = forms.quadratic_norm(gram, v)
        if norm > 0.0:
            worst = max(worst, abs(float(numpy.sum(gradient * v.get_coefficients()))) / norm)
    return worst


def run_main_flow(config, energy, y0, callback=None):
    '''Runs the main flow from `y0` until the next increment is within the
    tolerance or the step cap is reached.

    :param callback: Optional callable receiving the step number and the new
      iterate after every accepted step.

    :returns: A :class:`~ldgplates.flows.FlowState`.
    :raises: :exc:`~ldgplates.flows.KKTError`, :exc:`~ldgplates.flows.Error`
      when a step increases the energy.
    '''
    start = timeit.default_timer()
    flow = MainFlow(config, energy)
    assembly = energy.get_assembly()
    space = assembly.get_space()
    metric = energy.get_metric()
    state = flow_config.FlowState(
        y0.copy(), config, energy.energy(y0), defect.metric_defect(y0, metric),
        space.get_mesh().get_area(), infsup.poincare_constant(assembly))
    if state.initial_defect > state.epsilon0:
        logging.warning('Initial defect %g exceeds epsilon0 %g', state.initial_defect,
                        state.epsilon0)
    logging.info('Main flow: E_h=%g, D_h=%g, %s', state.initial_energy, state.initial_defect,
                 config)
    mean0 = y0.integrate()
    y = y0
    previous = state.initial_energy
    for n in range(1, config.max_steps + 1):
        result = flow.step(y)
        norm = flow.norm(result.increment)
        # Increments within the tolerance are neither applied nor recorded.
        if norm <= config.tol:
            state.multiplier = result.multiplier
            state.converged = True
            break
        y = y + result.increment
        breakdown = energy.breakdown(y)
        if breakdown.total + norm ** 2 / config.tau > previous + energy_slack(previous):
            raise flow_config.Error('Energy increased at step %d: %.17g -> %.17g'
                                    % (n, previous, breakdown.total))
        if result.get_deficiency():
            logging.warning('Step %d dropped %d dependent constraint(s)', n,
                            result.get_deficiency())
        record = state.append(
            E_h=breakdown.total, D_h=defect.metric_defect(y, metric), incr_norm=norm,
            incr_gradient_norm=forms.gradient_norm(result.increment),
            kkt_residual=result.get_kkt_residual(),
            constraint_residual=result.constraint_residual,
            deficiency=result.get_deficiency(),
            mean_drift=float(abs(y.integrate() - mean0).max()))
        logging.info('Step %d: E_h=%.12g, D_h=%g, |dy|=%g', n, record.E_h, record.D_h, norm)
        previous = breakdown.total
        state.y = y
        state.multiplier = result.multiplier
        if callback is not None:
            callback(n, y)
    if not state.converged:
        logging.warning('Main flow stopped after %d step(s) without convergence',
                        state.get_num_steps())
    state.stationarity_residual = stationarity_residual(
        energy, y, flow.get_gram(), config.stationarity_samples, config.seed)
    state.beta = infsup.estimate_infsup(assembly, y)
    logging.info('Main flow finished in %d step(s), %f second(s)', state.get_num_steps(),
                 timeit.default_timer() - start)
    return state
