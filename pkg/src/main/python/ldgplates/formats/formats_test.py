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
import os
import shutil
import tempfile

import numpy

from ldgplates import dg
from ldgplates import formats
from ldgplates import mesh
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import unittest


def _flat(x):
    return numpy.stack([x[:, 0], x[:, 1], numpy.zeros(len(x))], axis=-1)


class StepsTest(unittest.TestCase):

    def test_header_and_rows(self):
        stream = io.StringIO()
        records = [parameters_pb2.StepRecord(stage='main', step=1, E_h=0.5, tau=0.25),
                   parameters_pb2.StepRecord(stage='main', step=2, E_h=0.125, tau=0.25)]
        formats.write_steps(stream, records)
        lines = stream.getvalue().splitlines()
        self.assert_equal(lines[0], ','.join(formats.COLUMNS))
        self.assert_equal(lines[1], 'main,1,0.5,0,0,0,0,0.25,0')
        self.assert_equal(len(lines), 3)

    def test_type_errors(self):
        with self.assert_raises(TypeError):
            formats.StepsEncoder(42)
        encoder = formats.StepsEncoder(io.StringIO())
        with self.assert_raises(TypeError):
            encoder.encode_record(parameters_pb2.Certificate())

    def test_study_rows(self):
        stream = io.StringIO()
        formats.write_study(stream, [parameters_pb2.RefinementRow(level=1, h_max=0.5)])
        lines = stream.getvalue().splitlines()
        self.assert_equal(lines[0], ','.join(formats.STUDY_COLUMNS))
        self.assert_equal(lines[1], '1,0.5,-1,0,-1,0,-1,0,0,0,0,0')
        with self.assert_raises(TypeError):
            formats.write_study(io.StringIO(), [parameters_pb2.StepRecord()])


class ReportsTest(unittest.TestCase):

    def test_certificate_report(self):
        report = parameters_pb2.CertificateReport(passed=True, beta=0.5)
        report.certificates.add(name='energy_decay', passed=True, value=-1e-12)
        stream = io.StringIO()
        formats.write_message(stream, report)
        self.assert_in('"energy_decay"', stream.getvalue())
        stream.seek(0)
        self.assert_equal(formats.read_message(stream, parameters_pb2.CertificateReport),
                          report)


class SurfaceTest(unittest.TestCase):

    def setup(self):
        self.space = dg.DGSpace(mesh.build_structured_mesh(((0.0, 0.0), (1.0, 1.0)), 1, 1), 2)
        self.y = self.space.interpolate(_flat)

    def test_corner_points(self):
        surface = formats.surface_mesh(self.y, dict(defect_density=[1.0, 2.0]))
        m = self.space.get_mesh()
        expected = m.get_vertices()[m.get_elements()].reshape(-1, 2)
        self.assert_allclose(surface.points[:, :2], expected, atol=1e-14)
        self.assert_allclose(surface.points[:, 2], 0.0)
        self.assert_allclose(surface.point_data['defect_density'], [1, 1, 1, 2, 2, 2])

    def test_element_data_shape(self):
        with self.assert_raises(ValueError):
            formats.surface_mesh(self.y, dict(defect_density=[1.0]))

    def test_write(self):
        directory = tempfile.mkdtemp()
        try:
            filename = os.path.join(directory, 'surface_0.vtk')
            formats.write_surface(filename, self.y)
            with open(filename) as stream:
                self.assert_true(stream.readline().startswith('# vtk DataFile'))
        finally:
            shutil.rmtree(directory)


if __name__ == '__main__':
    unittest.main()
