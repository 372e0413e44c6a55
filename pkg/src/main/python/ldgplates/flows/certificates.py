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

"""Machine-checkable certificates recomputed from flow logs."""

from ldgplates.flows import flow_config
from ldgplates.parameters import parameters_pb2

ENERGY_SLACK = 1e-10
DEFECT_SLACK = 1e-10
MEAN_DRIFT_TOLERANCE = 1e-10
STATIONARITY_TOLERANCE = 1e-6


def _certificate(name, value, bound, failing_step=-1):
    return parameters_pb2.Certificate(name=name, passed=bool(value <= bound),
                                      value=float(value), bound=float(bound),
                                      failing_step=failing_step)


def _skipped(name, reason):
    return parameters_pb2.Certificate(name=name, passed=True, skipped=True, reason=reason)


def energy_decay_certificate(energies, records, factor, name='energy_decay'):
    '''Checks E_{n+1} + factor/tau ||dy||^2 <= E_n for every logged step.

    :param energies: Initial energy followed by the energy after every step.
    :returns: A certificate whose ``failing_step`` names the first violation.
    '''
    worst = 0.0
    failing = -1
    for previous, record in zip(energies, records):
        excess = (energies[record.step] + factor * record.incr_norm ** 2 / record.tau
                  - previous - ENERGY_SLACK * max(1.0, abs(previous)))
        if excess > 0.0 and failing < 0:
            failing = record.step
        worst = max(worst, excess)
    certificate = _certificate(name, worst, 0.0, failing)
    if failing >= 0:
        certificate.reason = 'energy increased at step %d' % failing
    return certificate


def defect_control_certificate(state):
    '''D_h(y_N) <= epsilon0 + c tau (E_h(y_0) - E_h(y_N)), c the Poincare
    constant of the flow norm.
    '''
    name = 'defect_control_dirichlet' if state.config.is_dirichlet() else 'defect_control'
    if state.poincare_constant is None:
        return _skipped(name, 'no Poincare constant recorded')
    budget = max(state.initial_energy - state.get_final_energy(), 0.0)
    bound = state.epsilon0 + state.poincare_constant * state.config.tau * budget
    return _certificate(name, state.get_final_defect(),
                        bound + DEFECT_SLACK * (1.0 + bound))


def defect_telescoping_certificate(state):
    '''D_h(y_N) <= D_h(y_0) + sum ||grad_h dy||^2.'''
    bound = state.initial_defect + sum(record.incr_gradient_norm ** 2
                                       for record in state.records)
    return _certificate('defect_telescoping', state.get_final_defect(),
                        bound + DEFECT_SLACK * (1.0 + bound))


def mean_drift_certificate(state):
    if state.config.is_dirichlet():
        return _skipped('mean_drift', 'means not conserved under Dirichlet data')
    drift = max([record.mean_drift for record in state.records] or [0.0])
    return _certificate('mean_drift', drift, MEAN_DRIFT_TOLERANCE * state.area)


def stationarity_certificate(state):
    if state.stationarity_residual is None:
        return _skipped('stationarity', 'no stationarity residual recorded')
    if not state.converged:
        return _skipped('stationarity', 'flow did not converge')
    return _certificate('stationarity', state.stationarity_residual,
                        STATIONARITY_TOLERANCE * (1.0 + abs(state.initial_energy)))


def flow_certificates(state):
    '''Certificates of a main flow run.

    :param state: A completed :class:`~ldgplates.flows.FlowState`.
    :returns: A :class:`~ldgplates.parameters.parameters_pb2.CertificateReport`.
    '''
    if not isinstance(state, flow_config.FlowState):
        raise TypeError('Expected a FlowState: %s' % type(state))
    mode = parameters_pb2.DIRICHLET if state.config.is_dirichlet() else parameters_pb2.FREE
    report = parameters_pb2.CertificateReport(mode=mode)
    report.certificates.extend([
        energy_decay_certificate(state.get_energies(), state.records, 1.0),
        defect_control_certificate(state),
        defect_telescoping_certificate(state),
        mean_drift_certificate(state),
        stationarity_certificate(state),
    ])
    if state.beta is not None:
        report.beta = state.beta
    if state.poincare_constant is not None:
        report.poincare_constant = state.poincare_constant
    report.passed = all(certificate.passed for certificate in report.certificates)
    return report


def preprocess_certificates(result):
    '''Energy decay with the 1/(2 tau) factor and monotone step rule constants
    of a preprocessing run.

    :returns: A list of certificates.
    '''
    energies = ([result.initial_energies['E_p']]
                + [record.E_h for record in result.records])
    decay = energy_decay_certificate(energies, result.records, 0.5,
                                     name='preprocess_energy_decay')
    step_constants = result.get_step_constants()
    worst = 0.0
    failing = -1
    for step, (previous, current) in enumerate(zip(step_constants, step_constants[1:]), 2):
        drop = previous - current - 1e-12 * previous
        if drop > 0.0 and failing < 0:
            failing = step
        worst = max(worst, drop)
    return [decay, _certificate('step_rule_monotone', worst, 0.0, failing)]
