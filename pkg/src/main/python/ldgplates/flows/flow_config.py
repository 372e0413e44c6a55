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

"""Configuration and state of the gradient flows."""

from ldgplates import mesh as mesh_lib
from ldgplates import solver
from ldgplates.parameters import parameters_pb2

DEFAULT_STATIONARITY_SAMPLES = 50


class Error(Exception):
    pass


class KKTError(Error):
    """A main flow step whose saddle system could not be solved.

    Carries the smallest detected pivot of a singular system or the residual
    history of a failed iterative solve.
    """

    def __init__(self, message, smallest_singular_value=None, history=None):
        Error.__init__(self, message)
        self.smallest_singular_value = smallest_singular_value
        self.history = list(history or [])


class FlowConfig(object):
    """Parameters of the main constrained flow.

    :param tau: Pseudo time-step, positive.
    :param tol: Stop once the H^2_h norm of the increment is at most `tol`.
    :param max_steps: Step cap.
    :param epsilon0: Admissible initial defect; ``None`` takes the realized
      defect of the initial guess.
    :param boundary_mode: :data:`~ldgplates.mesh.FREE` or
      :data:`~ldgplates.mesh.DIRICHLET`.
    :param solver_id: KKT solver, see :func:`ldgplates.solver.get_instance_of`.
    """

    def __init__(self, tau, tol=1e-8, max_steps=1000, epsilon0=None,
                 boundary_mode=mesh_lib.FREE, solver_id=solver.DIRECT_ID,
                 minres_max_iterations=5000,
                 stationarity_samples=DEFAULT_STATIONARITY_SAMPLES, seed=0,
                 check_constraint=True):
        if tau <= 0.0:
            raise ValueError('tau must be positive: %g' % tau)
        if tol <= 0.0:
            raise ValueError('tol must be positive: %g' % tol)
        if max_steps < 0:
            raise ValueError('max_steps must be nonnegative: %d' % max_steps)
        if boundary_mode not in mesh_lib.BOUNDARY_LABELS:
            raise ValueError('Unknown boundary mode: %s' % boundary_mode)
        if epsilon0 is not None and epsilon0 < 0.0:
            raise ValueError('epsilon0 must be nonnegative: %g' % epsilon0)
        self.tau = float(tau)
        self.tol = float(tol)
        self.max_steps = int(max_steps)
        self.epsilon0 = epsilon0
        self.boundary_mode = boundary_mode
        self.solver_id = solver_id
        self.minres_max_iterations = minres_max_iterations
        self.stationarity_samples = stationarity_samples
        self.seed = seed
        self.check_constraint = check_constraint

    def is_dirichlet(self):
        return self.boundary_mode == mesh_lib.DIRICHLET

    def get_solver_options(self):
        if self.solver_id == solver.MINRES_ID:
            return dict(max_iterations=self.minres_max_iterations)
        return {}

    def __str__(self):
        return '%s[tau=%g, tol=%g, max_steps=%d, mode=%s]' % (
            self.__class__.__name__, self.tau, self.tol, self.max_steps, self.boundary_mode)


class PreprocessConfig(object):
    """Parameters of the preprocessing flow.

    :param sigma: Weight of the bending part, nonnegative.
    :param tau: Requested pseudo time-step; every step uses at most half of
      the step rule constant c_h.
    :param abs_tol: Stop once E_s is at most `abs_tol` when sigma is zero.
    :param c_stop: Stop once E_p is at most ``c_stop * sigma`` when sigma is
      positive.
    :param cp: Continuity constant C_p, estimated when ``None``.
    :param cp_tilde: Constant of the step rule, estimated when ``None``.
    :param adaptive: Whether the step rule caps tau.
    """

    def __init__(self, sigma=0.0, tau=1.0, max_steps=200, abs_tol=1e-8, c_stop=1.0,
                 samples=200, cp=None, cp_tilde=None, max_halvings=20, adaptive=True,
                 seed=0):
        if sigma < 0.0:
            raise ValueError('sigma must be nonnegative: %g' % sigma)
        if tau <= 0.0:
            raise ValueError('tau must be positive: %g' % tau)
        if abs_tol <= 0.0 or c_stop <= 0.0:
            raise ValueError('Stopping tolerances must be positive: %g, %g'
                             % (abs_tol, c_stop))
        for name, value in (('cp', cp), ('cp_tilde', cp_tilde)):
            if value is not None and value < 0.0:
                raise ValueError('%s must be nonnegative: %g' % (name, value))
        if max_halvings < 0:
            raise ValueError('max_halvings must be nonnegative: %d' % max_halvings)
        self.sigma = float(sigma)
        self.tau = float(tau)
        self.max_steps = int(max_steps)
        self.abs_tol = float(abs_tol)
        self.c_stop = float(c_stop)
        self.samples = int(samples)
        self.cp = cp
        self.cp_tilde = cp_tilde
        self.max_halvings = int(max_halvings)
        self.adaptive = adaptive
        self.seed = seed

    def is_stopped(self, energies):
        if self.sigma > 0.0:
            return energies['E_p'] <= self.c_stop * self.sigma
        return energies['E_s'] <= self.abs_tol

    def __str__(self):
        return '%s[sigma=%g, tau=%g, max_steps=%d]' % (
            self.__class__.__name__, self.sigma, self.tau, self.max_steps)


class FlowState(object):
    """Iterate, multiplier and append-only step log of a flow run.

    Holds everything :func:`~ldgplates.flows.flow_certificates` needs, so the
    certificates can be recomputed from the log alone.
    """

    def __init__(self, y, config, initial_energy, initial_defect, area,
                 poincare_constant=None):
        self.y = y
        self.y0 = y.copy()
        self.multiplier = None
        self.config = config
        self.records = []
        self.initial_energy = float(initial_energy)
        self.initial_defect = float(initial_defect)
        self.area = float(area)
        self.epsilon0 = (self.initial_defect if config.epsilon0 is None
                         else float(config.epsilon0))
        self.poincare_constant = poincare_constant
        self.converged = False
        self.stationarity_residual = None
        self.beta = None

    def append(self, **fields):
        record = parameters_pb2.StepRecord(stage='main', step=len(self.records) + 1,
                                           tau=self.config.tau, **fields)
        self.records.append(record)
        return record

    def get_num_steps(self):
        return len(self.records)

    def get_energies(self):
        return [self.initial_energy] + [record.E_h for record in self.records]

    def get_final_energy(self):
        return self.get_energies()[-1]

    def get_final_defect(self):
        return self.records[-1].D_h if self.records else self.initial_defect

    def __str__(self):
        return '%s[steps=%d, converged=%s]' % (self.__class__.__name__,
                                               len(self.records), self.converged)
