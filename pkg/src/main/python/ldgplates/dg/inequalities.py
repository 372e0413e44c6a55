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

"""Sampled discrete Poincare-Friedrichs and Sobolev inequality ratios."""

import numpy

from ldgplates.dg import dg_field
from ldgplates.dg import forms
from ldgplates.dg import skeleton as skeleton_lib

NUM_MODES = 4
MAX_FREQUENCY = 2


def _ratio(numerator, denominator):
    if denominator <= 0.0:
        return 0.0
    return numerator / denominator


def sample_smooth_field(space, rng, num_components=1, noise=1e-2):
    """Interpolant of a random low-frequency trigonometric sum plus broken noise.

    The trigonometric part is drawn first, so two spaces sampled with equally
    seeded generators see the same smooth function. The noise is scaled by
    h_max^2.
    """
    mesh = space.get_mesh()
    lo = mesh.get_vertices().min(axis=0)
    extent = mesh.get_vertices().max(axis=0) - lo
    freqs = rng.integers(0, MAX_FREQUENCY + 1, size=(num_components, NUM_MODES, 2))
    phases = rng.uniform(0.0, 2.0 * numpy.pi, size=(num_components, NUM_MODES))
    amplitudes = rng.standard_normal((num_components, NUM_MODES))

    def function(x):
        t = (x - lo) / extent * numpy.pi
        arg = numpy.einsum('cmi,ni->cmn', freqs, t) + phases[..., None]
        return numpy.einsum('cm,cmn->nc', amplitudes, numpy.sin(arg))

    field = space.interpolate(function)
    scale = noise * mesh.get_h_max() ** 2
    return field + dg_field.DGField(
        space, scale * rng.standard_normal(field.get_coefficients().shape))


def poincare_ratio(skeleton, field):
    """||v - mean|| / (||grad_h v|| + ||h^-1/2 [v]||)."""
    centered = field.shift(-field.mean())
    return _ratio(forms.l2_norm(centered),
                  forms.gradient_norm(field)
                  + forms.jump_value_norm(skeleton, field, power=1))


def sobolev_ratio(skeleton, field):
    """||v||_L4 / (||grad_h v|| + ||h^-1/2 [v]|| + ||v||)."""
    return _ratio(forms.lp_norm(field, 4),
                  forms.gradient_norm(field)
                  + forms.jump_value_norm(skeleton, field, power=1)
                  + forms.l2_norm(field))


def gradient_bound_ratio(skeleton, field):
    """||grad_h v|| / (||v|| + |v|_H2h)."""
    return _ratio(forms.gradient_norm(field),
                  forms.l2_norm(field) + forms.h2_seminorm(skeleton, field))


def functional_inequality_check(space, samples, seed=0, skeleton=None):
    """Maximum observed ratios of the discrete functional inequalities.

    :returns: A dictionary with keys ``poincare_ratio_max``,
      ``sobolev_ratio_max`` and ``grad_bound_ratio_max``.
    """
    if samples < 1:
        raise ValueError('samples must be positive: %d' % samples)
    if skeleton is None:
        skeleton = skeleton_lib.Skeleton(space)
    rng = numpy.random.default_rng(seed)
    report = dict(poincare_ratio_max=0.0, sobolev_ratio_max=0.0,
                  grad_bound_ratio_max=0.0)
    for _ in range(samples):
        field = sample_smooth_field(space, rng)
        report['poincare_ratio_max'] = max(report['poincare_ratio_max'],
                                           poincare_ratio(skeleton, field))
        report['sobolev_ratio_max'] = max(report['sobolev_ratio_max'],
                                          sobolev_ratio(skeleton, field))
        report['grad_bound_ratio_max'] = max(report['grad_bound_ratio_max'],
                                             gradient_bound_ratio(skeleton, field))
    return report
