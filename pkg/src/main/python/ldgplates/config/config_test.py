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

import io

from ldgplates import config
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import unittest

CONFIG = '''
# Stretched plate.
[mesh]
nx = 16
kind = quad
dirichlet_sides = left+bottom

[metric]
name = stretched
beta = 0.5

[boundary]
mode = Dirichlet
phi3 = 0.1*sin(x1)

[preprocess]
sigma_rule = h2
enabled = no

[flow]
tau_rule = TAU_EXPLICIT
tau = 0.05
solver = minres
'''


class DecoderTest(unittest.TestCase):

    def test_decode(self):
        params = config.load_parameters(io.StringIO(CONFIG))
        self.assert_equal(16, params.mesh.nx)
        self.assert_equal(8, params.mesh.ny)
        self.assert_equal(parameters_pb2.QUAD, params.mesh.kind)
        self.assert_equal('left+bottom', params.mesh.dirichlet_sides)
        self.assert_almost_equal(0.5, params.metric.beta)
        self.assert_equal(parameters_pb2.DIRICHLET, params.boundary.mode)
        self.assert_equal('0.1*sin(x1)', params.boundary.phi3)
        self.assert_equal(parameters_pb2.SIGMA_H2, params.preprocess.sigma_rule)
        self.assert_false(params.preprocess.enabled)
        self.assert_equal(parameters_pb2.TAU_EXPLICIT, params.flow.tau_rule)
        self.assert_equal(parameters_pb2.MINRES, params.flow.solver)
        params.validate()

    def test_errors_name_the_line(self):
        cases = (
            ('[mesh]\nnx = many\n', 2),
            ('[solver]\n', 1),
            ('[mesh]\n\n# c\nwidth = 3\n', 4),
            ('nx = 3\n', 1),
            ('[mesh\n', 1),
            ('[mesh]\nnx 3\n', 2),
            ('[flow]\nsolver = cholesky\n', 2),
            ('[output]\nwrite_vtk = maybe\n', 2),
            ('[mesh]\nnx = 4\n[material]\nmesh = 3\n', 4),
        )
        for text, line_number in cases:
            with self.assert_raises(config.Error) as context:
                config.Decoder().decode_from_string(text)
            self.assert_equal(line_number, context.exception.line_number)

    def test_type_errors(self):
        self.assert_raises(TypeError, config.Decoder, 3)
        self.assert_raises(TypeError, config.Decoder().decode_from_string, b'[mesh]')

    def test_encoder_writes_every_section(self):
        params = config.load_parameters(io.StringIO(CONFIG))
        stream = io.StringIO()
        config.save_parameters(stream, params)
        text = stream.getvalue()
        self.assert_in('[discretization]\ndegree = 2\n', text)
        self.assert_in('kind = quad\n', text)
        self.assert_in('sigma_rule = sigma_h2\n', text)
        self.assert_in('enabled = false\n', text)
        decoded = config.Decoder().decode_from_string(text)
        again = io.StringIO()
        config.save_parameters(again, decoded)
        self.assert_equal(text, again.getvalue())
        self.assert_raises(TypeError, config.Encoder, io.StringIO(), 'params')

    def test_describe_defaults(self):
        text = config.describe_defaults()
        self.assert_in('[flow]\ntau_rule = tau_h\n', text)
        params = config.Decoder().decode_from_string(text)
        self.assert_equal(params.flow.max_steps, 1000)
        self.assert_equal(params.metric.name, 'identity')


    def test_apply_override(self):
        params = config.Decoder().get_parameters()
        config.apply_override(params, 'metric.beta = 0.25')
        config.apply_override(params, 'flow.tau_rule=explicit')
        config.apply_override(params, 'output.write_vtk=no')
        self.assert_equal(params.metric.beta, 0.25)
        self.assert_equal(params.flow.tau_rule, parameters_pb2.TAU_EXPLICIT)
        self.assert_false(params.output.write_vtk)
        for assignment in ('metric.beta', 'beta=1', 'nowhere.beta=1', 'metric.colour=1',
                           'metric.beta=x'):
            self.assert_raises(ValueError, config.apply_override, params, assignment)


if __name__ == '__main__':
    unittest.main()
