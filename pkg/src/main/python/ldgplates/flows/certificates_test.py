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

import numpy

from ldgplates import dg
from ldgplates import energy
from ldgplates import flows
from ldgplates import lifting
from ldgplates import mesh
from ldgplates.dg import inequalities
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import unittest

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def _flat(x):
    return numpy.stack([x[:, 0], x[:, 1], numpy.zeros(len(x))], axis=-1)


def _by_name(report):
    return dict((certificate.name, certificate) for certificate in report.certificates)


class FlowCertificatesTest(unittest.TestCase):

    def setup(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2), 2)
        assembly = lifting.LiftingAssembly(space)
        bending = energy.BendingEnergy.from_params(energy.EnergyParams(), assembly,
                                                   energy.identity_metric())
        rng = numpy.random.default_rng(4)
        y0 = space.interpolate(_flat) + 1e-2 * inequalities.sample_smooth_field(space, rng, 3)
        config = flows.FlowConfig(space.get_mesh().get_h_max(), max_steps=3,
                                  stationarity_samples=3)
        self.space = space
        self.state = flows.run_main_flow(config, bending, y0)

    def test_run_passes(self):
        report = flows.flow_certificates(self.state)
        self.assert_true(report.passed)
        self.assert_equal(report.mode, parameters_pb2.FREE)
        self.assert_equal(len(report.certificates), 5)
        self.assert_greater(report.poincare_constant, 0.0)

    def test_corrupted_energy_log(self):
        self.assert_equal(self.state.get_num_steps(), 3)
        self.state.records[1].E_h += 1.0
        report = flows.flow_certificates(self.state)
        self.assert_false(report.passed)
        decay = _by_name(report)['energy_decay']
        self.assert_false(decay.passed)
        self.assert_equal(decay.failing_step, 2)
        self.assert_in('step 2', decay.reason)

    def test_dirichlet_skips_mean_drift(self):
        config = flows.FlowConfig(0.1, boundary_mode=mesh.DIRICHLET)
        y = self.space.interpolate(_flat)
        state = flows.FlowState(y, config, 0.0, 0.0, 1.0)
        report = flows.flow_certificates(state)
        certificates = _by_name(report)
        self.assert_true(certificates['mean_drift'].skipped)
        self.assert_equal(certificates['mean_drift'].reason,
                          'means not conserved under Dirichlet data')
        self.assert_in('defect_control_dirichlet', certificates)
        self.assert_equal(report.mode, parameters_pb2.DIRICHLET)
        self.assert_true(report.passed)

    def test_type_check(self):
        with self.assert_raises(TypeError):
            flows.flow_certificates(self.state.records)


if __name__ == '__main__':
    unittest.main()
