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

"""Sampled stability and semi-norm equivalence diagnostics of the liftings."""

import numpy

from ldgplates.dg import dg_field
from ldgplates.dg import forms


def _check_samples(samples):
    if samples < 1:
        raise ValueError('samples must be positive: %d' % samples)


def _jump_norms(assembly, field):
    skeleton = assembly.get_skeleton()
    return (forms.jump_gradient_norm(skeleton, field),
            forms.jump_value_norm(skeleton, field))


def lifting_stability_ratios(assembly, samples, seed=0):
    """Largest observed ||R_h([grad v])|| / ||h^-1/2 [grad v]|| and
    ||B_h([v])|| / ||h^-3/2 [v]|| over random fields.
    """
    _check_samples(samples)
    rng = numpy.random.default_rng(seed)
    space = assembly.get_space()
    r_max = b_max = 0.0
    for _ in range(samples):
        field = dg_field.random_field(space, rng=rng)
        grad_jump, value_jump = _jump_norms(assembly, field)
        if grad_jump > 0.0:
            r_max = max(r_max, forms.l2_norm(assembly.lift_r(field)) / grad_jump)
        if value_jump > 0.0:
            b_max = max(b_max, forms.l2_norm(assembly.lift_b(field)) / value_jump)
    return dict(r_ratio_max=r_max, b_ratio_max=b_max)


def seminorm_equivalence_ratio(assembly, field, gamma0, gamma1):
    """(||H_h v||^2 + gamma1 ||h^-1/2 [grad v]||^2 + gamma0 ||h^-3/2 [v]||^2) / |v|^2_H2h."""
    grad_jump, value_jump = _jump_norms(assembly, field)
    jumps = grad_jump ** 2 + value_jump ** 2
    seminorm = forms.hessian_norm(field) ** 2 + jumps
    if seminorm <= 0.0:
        return None
    hessian = assembly.discrete_hessian(field).l2_norm()
    return (hessian ** 2 + gamma1 * grad_jump ** 2 + gamma0 * value_jump ** 2) / seminorm


def seminorm_equivalence_check(assembly, gamma0, gamma1, samples, seed=0):
    """Observed constants of the discrete H^2 semi-norm equivalence.

    :returns: A dictionary with keys ``C_lower_observed`` and
      ``C_upper_observed``.
    """
    if gamma0 <= 0.0 or gamma1 <= 0.0:
        raise ValueError('Stabilization parameters must be positive: %g, %g'
                         % (gamma0, gamma1))
    _check_samples(samples)
    rng = numpy.random.default_rng(seed)
    ratios = []
    for _ in range(samples):
        field = dg_field.random_field(assembly.get_space(), rng=rng)
        ratio = seminorm_equivalence_ratio(assembly, field, gamma0, gamma1)
        if ratio is not None:
            ratios.append(ratio)
    if not ratios:
        raise ValueError('No sampled field has a positive H^2_h semi-norm')
    return dict(C_lower_observed=float(min(ratios)), C_upper_observed=float(max(ratios)))
