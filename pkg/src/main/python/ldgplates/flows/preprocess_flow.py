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

"""The metric preprocessing flow.

An unconstrained gradient flow of E_p = E_s + sigma E_b that drives the
metric defect of an initial guess down before the main flow starts. Each
step solves the SPD system

  tau^-1 (dy, v) + a_s(y_n; dy, v) + sigma a_b(dy, v)
      = -a_s(y_n; y_n, v) - sigma (a_b(y_n, v) + d_b(v))

with tau capped by half of the step rule constant c_h(y_n).
"""

import timeit

import numpy

from ldgplates import solver
from ldgplates.dg import dg_field
from ldgplates.dg import forms
from ldgplates.dg import inequalities
from ldgplates.energy import bending
from ldgplates.energy import defect
from ldgplates.energy import preprocess
from ldgplates.flows import flow_config
from ldgplates.flows import infsup
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import logging

SAFETY_FACTOR = 2.0
PERTURBATION = 0.1
ENERGY_SLACK = 1e-10


def sigma_for_rule(rule, h_max, sigma=0.0):
    '''sigma_h for a :class:`~ldgplates.parameters.parameters_pb2.SigmaRule`.'''
    if rule == parameters_pb2.SIGMA_ZERO:
        return 0.0
    if rule == parameters_pb2.SIGMA_H2:
        return float(h_max) ** 2
    if rule == parameters_pb2.SIGMA_EXPLICIT:
        if sigma < 0.0:
            raise ValueError('sigma must be nonnegative: %g' % sigma)
        return float(sigma)
    raise ValueError('Unknown sigma rule: %s' % rule)


def flat_initial_guess(space, metric):
    '''(sqrt(gbar11) x1, sqrt(gbar22) x2, 0) with gbar the mean of the metric.'''
    mean = metric.mean(space)
    scale = numpy.sqrt(numpy.array([mean[0, 0], mean[1, 1]]))

    def function(x):
        return numpy.column_stack([scale[0] * x[:, 0], scale[1] * x[:, 1],
                                   numpy.zeros(len(x))])

    return space.interpolate(function, bending.NUM_COMPONENTS)


def _stretching_tensor(y, metric):
    space = y.get_space()
    g, _ = metric.at_quadrature(space)
    grads = y.gradients()
    return numpy.einsum('ceqa,ceqb->eqab', grads, grads) - g


def stretching_form(anchor, metric, u, v):
    '''a_s(anchor; u, v) evaluated pointwise.'''
    residual = _stretching_tensor(anchor, metric)
    values = numpy.einsum('eqab,ceqa,ceqb->eq', residual, u.gradients(), v.gradients())
    return 2.0 * float(anchor.get_space().integrate(values))


def _nonlinear_remainder(anchor, increment):
    """||grad dy^T grad y + grad y^T grad dy + grad dy^T grad dy||^2 in L^2."""
    gy = anchor.gradients()
    gd = increment.gradients()
    w = (numpy.einsum('ceqa,ceqb->eqab', gd, gy) + numpy.einsum('ceqa,ceqb->eqab', gy, gd)
         + numpy.einsum('ceqa,ceqb->eqab', gd, gd))
    return float(anchor.get_space().integrate((w ** 2).sum(axis=(-2, -1))))


class StepRuleConstants(object):
    """Continuity constants C_p and C~_p of the step rule."""

    def __init__(self, cp, cp_tilde, h_min, metric_l1, sigma):
        self.cp = float(cp)
        self.cp_tilde = float(cp_tilde)
        self.h_min = float(h_min)
        self.metric_l1 = float(metric_l1)
        self.sigma = float(sigma)

    def d_h(self, energy_p):
        root = numpy.sqrt(max(energy_p, 0.0))
        return (0.5 * self.cp * root + 0.5 * self.cp_tilde * (
            (energy_p + 1.0) * (root + self.metric_l1) / self.h_min + self.sigma * energy_p))

    def c_h(self, energy_p):
        '''c_h = min((1 + C_p E_p^1/2)^-1, d_h^-1); nonincreasing in E_p.'''
        root = numpy.sqrt(max(energy_p, 0.0))
        first = 1.0 / (1.0 + self.cp * root)
        d = self.d_h(energy_p)
        return first if d <= 0.0 else min(first, 1.0 / d)

    def __str__(self):
        return '%s[cp=%g, cp_tilde=%g, h_min=%g]' % (self.__class__.__name__, self.cp,
                                                     self.cp_tilde, self.h_min)


def estimate_preprocess_constants(energy, y0, samples, seed=0, gram=None):
    '''Samples the continuity ratios behind C_p and C~_p around `y0`.

    Anchors are `y0` plus smooth perturbations; the largest observed ratios
    are multiplied by :data:`SAFETY_FACTOR`.

    :param energy: A :class:`~ldgplates.energy.PreprocessEnergy`.
    :returns: A :class:`StepRuleConstants` instance.
    '''
    if samples < 1:
        raise ValueError('samples must be positive: %d' % samples)
    start = timeit.default_timer()
    assembly = energy.get_bending().get_assembly()
    space = assembly.get_space()
    metric = energy.get_metric()
    if gram is None:
        gram = infsup.flow_gram(assembly)
    mesh = space.get_mesh()
    h_min = mesh.get_h_min()
    metric_l1 = metric.l1_norm(space)
    sigma = energy.get_sigma()
    rng = numpy.random.default_rng(seed)
    cp = cp_tilde = 0.0
    for _ in range(samples):
        anchor = y0 + PERTURBATION * inequalities.sample_smooth_field(
            space, rng, bending.NUM_COMPONENTS)
        u = inequalities.sample_smooth_field(space, rng, bending.NUM_COMPONENTS)
        v = inequalities.sample_smooth_field(space, rng, bending.NUM_COMPONENTS)
        norm_u = forms.quadratic_norm(gram, u)
        norm_v = forms.quadratic_norm(gram, v)
        energies = energy.energies(anchor)
        root = numpy.sqrt(energies['E_s'])
        if norm_u > 0.0 and norm_v > 0.0 and root > 0.0:
            cp = max(cp, abs(stretching_form(anchor, metric, u, v)) / (root * norm_u * norm_v))
        e_p = energies['E_p']
        scale = ((e_p + 1.0) * (numpy.sqrt(e_p) + metric_l1) / h_min + sigma * e_p)
        if norm_u > 0.0:
            increment = u * (PERTURBATION / norm_u)
            cp_tilde = max(cp_tilde, _nonlinear_remainder(anchor, increment)
                           / (scale * PERTURBATION ** 2))
    constants = StepRuleConstants(SAFETY_FACTOR * cp, SAFETY_FACTOR * cp_tilde, h_min,
                                  metric_l1, sigma)
    logging.info('Estimated %s from %d sample(s) in %f second(s)', constants, samples,
                 timeit.default_timer() - start)
    return constants


def step_rule_constants(config, energy, y0, gram=None):
    '''Configured constants, with the missing ones estimated.'''
    assembly = energy.get_bending().get_assembly()
    space = assembly.get_space()
    cp, cp_tilde = config.cp, config.cp_tilde
    if cp is None or cp_tilde is None:
        estimated = estimate_preprocess_constants(energy, y0, config.samples, config.seed,
                                                  gram)
        cp = estimated.cp if cp is None else cp
        cp_tilde = estimated.cp_tilde if cp_tilde is None else cp_tilde
    return StepRuleConstants(cp, cp_tilde, space.get_mesh().get_h_min(),
                             energy.get_metric().l1_norm(space), energy.get_sigma())


class PreprocessStep(object):
    """An accepted preprocessing step."""

    def __init__(self, increment, tau, c_h, rejections, before, after, norm):
        self.increment = increment
        self.tau = tau
        self.c_h = c_h
        self.rejections = rejections
        self.before = before
        self.after = after
        self.norm = norm


def _solve_increment(energy, gram, y, tau):
    matrix = gram / tau + energy.stretching_matrix(y)
    if energy.get_sigma() > 0.0:
        matrix = matrix + energy.get_sigma() * energy.get_bending().matrix()
    matrix = solver.SparseSymmetric(0.5 * (matrix + matrix.T), solver.SPD)
    rhs = -energy.gradient(y)
    return dg_field.DGField(y.get_space(), solver.solve_spd(matrix, rhs.T).T)


def preprocess_step(config, energy, y_n, constants, gram=None):
    '''One accepted step of the preprocessing flow from `y_n`.

    The time-step is ``min(tau, c_h(y_n) / 2)``. A step whose energy
    inequality fails, or whose matrix loses definiteness, is rejected and
    retried with half the time-step.

    :returns: A :class:`PreprocessStep`.
    :raises: :exc:`~ldgplates.flows.Error` after `max_halvings` rejections.
    '''
    if gram is None:
        gram = infsup.flow_gram(energy.get_bending().get_assembly())
    before = energy.energies(y_n)
    c_h = constants.c_h(before['E_p'])
    tau = min(config.tau, 0.5 * c_h) if config.adaptive else config.tau
    for rejections in range(config.max_halvings + 1):
        try:
            increment = _solve_increment(energy, gram, y_n, tau)
        except solver.NonPositivePivotError as e:
            logging.warning('Rejected preprocessing step with tau=%g: %s', tau, e)
            tau *= 0.5
            continue
        except solver.Error as e:
            raise flow_config.Error('Preprocessing solve failed: %s' % e)
        after = energy.energies(y_n + increment)
        norm = forms.quadratic_norm(gram, increment)
        slack = ENERGY_SLACK * max(1.0, before['E_p'])
        if after['E_p'] + norm ** 2 / (2.0 * tau) <= before['E_p'] + slack:
            return PreprocessStep(increment, tau, c_h, rejections, before, after, norm)
        logging.warning('Rejected preprocessing step with tau=%g: E_p %.12g -> %.12g',
                        tau, before['E_p'], after['E_p'])
        tau *= 0.5
    raise flow_config.Error('Preprocessing step failed after %d halving(s)'
                            % config.max_halvings)


class PreprocessResult(object):
    """Output iterate and log of a preprocessing run."""

    def __init__(self, y, records, converged, energies, defect_h, chain, constants,
                 initial_energies):
        self.y = y
        self.initial_energies = initial_energies
        self.records = records
        self.converged = converged
        self.energies = energies
        self.defect = defect_h
        self.chain = chain
        self.constants = constants

    def get_num_steps(self):
        return len(self.records)

    def get_step_constants(self):
        return [record.c_h for record in self.records]

    def __str__(self):
        return '%s[steps=%d, converged=%s, E_s=%g, D_h=%g]' % (
            self.__class__.__name__, len(self.records), self.converged,
            self.energies['E_s'], self.defect)


def run_preprocess(config, energy, y0):
    '''Iterates the preprocessing flow from `y0` until the stop rule holds.

    Reaching `max_steps` returns the last iterate, which has the lowest E_p
    since every accepted step decreases it, with ``converged`` unset.

    :returns: A :class:`PreprocessResult`.
    '''
    start = timeit.default_timer()
    assembly = energy.get_bending().get_assembly()
    metric = energy.get_metric()
    gram = infsup.flow_gram(assembly)
    constants = step_rule_constants(config, energy, y0, gram)
    logging.info('Preprocessing: %s, %s', config, constants)
    y = y0
    records = []
    energies = initial = energy.energies(y)
    converged = config.is_stopped(energies)
    while not converged and len(records) < config.max_steps:
        step = preprocess_step(config, energy, y, constants, gram)
        y = y + step.increment
        energies = step.after
        records.append(parameters_pb2.StepRecord(
            stage='preprocess', step=len(records) + 1, E_h=energies['E_p'],
            E_s=energies['E_s'], E_b=energies['E_b'], D_h=defect.metric_defect(y, metric),
            incr_norm=step.norm, incr_gradient_norm=forms.gradient_norm(step.increment),
            tau=step.tau, c_h=step.c_h, rejections=step.rejections))
        logging.info('Preprocessing step %d: E_p=%.12g, E_s=%g, tau=%g', len(records),
                     energies['E_p'], energies['E_s'], step.tau)
        converged = config.is_stopped(energies)
    if not converged:
        logging.warning('Preprocessing stopped after %d step(s) without meeting the stop rule',
                        len(records))
    chain = preprocess.defect_stretching_chain(y, metric)
    if not chain['holds']:
        raise flow_config.Error('Defect chain violated: %s' % chain)
    result = PreprocessResult(y, records, converged, energies,
                              defect.metric_defect(y, metric), chain, constants, initial)
    logging.info('%s in %f second(s)', result, timeit.default_timer() - start)
    return result
