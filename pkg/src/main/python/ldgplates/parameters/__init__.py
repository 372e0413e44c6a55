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

MIN_DEGREE = 2
MAX_DEGREE = 4

SECTIONS = ('mesh', 'discretization', 'material', 'metric', 'boundary', 'forcing',
            'preprocess', 'flow', 'output')


class Error(Exception):
    pass


class RunParameters(object):
    '''Typed parameters of one run.

    Wraps :class:`parameters_pb2.RunParameters`; every section is exposed as a
    property returning the mutable sub-message. Negative values of
    ``flow.tol``, ``flow.epsilon0``, ``preprocess.tau``, ``preprocess.cp``,
    ``preprocess.cp_tilde`` and of the optional degrees select computed defaults.
    '''

    def __init__(self, proto=None):
        self._proto = parameters_pb2.RunParameters()
        if proto is not None:
            if not isinstance(proto, parameters_pb2.RunParameters):
                raise TypeError('proto must be RunParameters: %s' % type(proto))
            self._proto.CopyFrom(proto)

    @property
    def mesh(self):
        return self._proto.mesh

    @property
    def discretization(self):
        return self._proto.discretization

    @property
    def material(self):
        return self._proto.material

    @property
    def metric(self):
        return self._proto.metric

    @property
    def boundary(self):
        return self._proto.boundary

    @property
    def forcing(self):
        return self._proto.forcing

    @property
    def preprocess(self):
        return self._proto.preprocess

    @property
    def flow(self):
        return self._proto.flow

    @property
    def output(self):
        return self._proto.output

    def get_section(self, name):
        if name not in SECTIONS:
            raise Error('Unknown section: %s' % name)
        return getattr(self._proto, name)

    def is_dirichlet(self):
        return self.boundary.mode == parameters_pb2.DIRICHLET

    def get_protobuf(self):
        return self._proto

    @classmethod
    def build_from_protobuf(cls, proto):
        return cls(proto)

    def copy(self):
        return RunParameters(self._proto)

    def validate(self):
        '''Checks the numeric ranges of all sections.

        :raises: :exc:`Error` naming the first offending field.
        '''
        material = self.material
        if material.mu <= 0.0:
            raise Error('material.mu must be positive: %g' % material.mu)
        if material.lam < 0.0:
            raise Error('material.lam must be nonnegative: %g' % material.lam)
        for name in ('gamma0', 'gamma1', 'gamma0_hat', 'gamma1_hat'):
            if getattr(material, name) <= 0.0:
                raise Error('material.%s must be positive: %g'
                            % (name, getattr(material, name)))
        degree = self.discretization.degree
        if not MIN_DEGREE <= degree <= MAX_DEGREE:
            raise Error('discretization.degree must lie in [%d, %d]: %d'
                        % (MIN_DEGREE, MAX_DEGREE, degree))
        if not self.mesh.path and (self.mesh.nx < 1 or self.mesh.ny < 1):
            raise Error('mesh.nx and mesh.ny must be positive: %d, %d'
                        % (self.mesh.nx, self.mesh.ny))
        if not self.mesh.path and (self.mesh.x1 <= self.mesh.x0 or
                                   self.mesh.y1 <= self.mesh.y0):
            raise Error('Degenerate mesh rectangle')
        if self.mesh.refinements < 0:
            raise Error('mesh.refinements must be nonnegative: %d' % self.mesh.refinements)
        flow = self.flow
        if flow.tau_rule == parameters_pb2.TAU_EXPLICIT and flow.tau <= 0.0:
            raise Error('flow.tau must be positive with an explicit rule: %g' % flow.tau)
        if flow.tol == 0.0:
            raise Error('flow.tol must be positive, or negative for the default')
        if flow.max_steps < 0:
            raise Error('flow.max_steps must be nonnegative: %d' % flow.max_steps)
        if flow.perturbation < 0.0:
            raise Error('flow.perturbation must be nonnegative: %g' % flow.perturbation)
        preprocess = self.preprocess
        if preprocess.sigma_rule == parameters_pb2.SIGMA_EXPLICIT and preprocess.sigma < 0.0:
            raise Error('preprocess.sigma must be nonnegative: %g' % preprocess.sigma)
        if preprocess.tau == 0.0:
            raise Error('preprocess.tau must be positive, or negative for the default')
        if preprocess.abs_tol <= 0.0 or preprocess.c_stop <= 0.0:
            raise Error('preprocess tolerances must be positive')
        if preprocess.samples < 1:
            raise Error('preprocess.samples must be positive: %d' % preprocess.samples)
        if self.metric.name == 'stretched' and self.metric.beta < 0.0:
            raise Error('metric.beta must be nonnegative: %g' % self.metric.beta)
        return self

    def __str__(self):
        return '%s[degree=%d, mode=%s]' % (
            self.__class__.__name__, self.discretization.degree,
            parameters_pb2.BoundaryMode.Name(self.boundary.mode))
