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

"""Protocol buffer messages of run parameters and reports.

The file descriptor is declared with :mod:`google.protobuf.descriptor_pb2`
and registered in the default pool, so the module behaves like protoc
output for ``ldgplates/parameters/parameters.proto`` (proto2).
"""

from google.protobuf import descriptor_pb2
from google.protobuf import descriptor_pool as _descriptor_pool
from google.protobuf import symbol_database as _symbol_database
from google.protobuf.internal import builder as _builder

_sym_db = _symbol_database.Default()

_PACKAGE = 'ldgplates.parameters'
_F = descriptor_pb2.FieldDescriptorProto

_DOUBLE = _F.TYPE_DOUBLE
_INT32 = _F.TYPE_INT32
_BOOL = _F.TYPE_BOOL
_STRING = _F.TYPE_STRING
_MESSAGE = _F.TYPE_MESSAGE
_ENUM = _F.TYPE_ENUM

_ENUMS = (
    ('ElementKind', ('TRI', 'QUAD')),
    ('BoundaryMode', ('FREE', 'DIRICHLET')),
    ('SigmaRule', ('SIGMA_ZERO', 'SIGMA_H2', 'SIGMA_EXPLICIT')),
    ('TauRule', ('TAU_H', 'TAU_EXPLICIT')),
    ('KKTSolverKind', ('DIRECT', 'MINRES')),
)

# (name, type, default or type name, repeated)
_MESSAGES = (
    ('MeshParameters', (
        ('path', _STRING, ''),
        ('x0', _DOUBLE, '0'),
        ('y0', _DOUBLE, '0'),
        ('x1', _DOUBLE, '1'),
        ('y1', _DOUBLE, '1'),
        ('nx', _INT32, '8'),
        ('ny', _INT32, '8'),
        ('kind', _ENUM, 'ElementKind:TRI'),
        ('dirichlet_sides', _STRING, ''),
        ('refinements', _INT32, '0'),
    )),
    ('DiscretizationParameters', (
        ('degree', _INT32, '2'),
        ('lifting_degree_r', _INT32, '-1'),
        ('lifting_degree_b', _INT32, '-1'),
        ('quadrature_degree', _INT32, '-1'),
        ('edge_quadrature_degree', _INT32, '-1'),
    )),
    ('MaterialParameters', (
        ('mu', _DOUBLE, '1'),
        ('lam', _DOUBLE, '0'),
        ('gamma0', _DOUBLE, '1'),
        ('gamma1', _DOUBLE, '1'),
        ('gamma0_hat', _DOUBLE, '1'),
        ('gamma1_hat', _DOUBLE, '1'),
    )),
    ('MetricParameters', (
        ('name', _STRING, 'identity'),
        ('g11', _STRING, '1'),
        ('g12', _STRING, '0'),
        ('g22', _STRING, '1'),
        ('beta', _DOUBLE, '1'),
    )),
    ('BoundaryParameters', (
        ('mode', _ENUM, 'BoundaryMode:FREE'),
        ('phi1', _STRING, 'x1'),
        ('phi2', _STRING, 'x2'),
        ('phi3', _STRING, '0'),
        ('bilaplacian_f1', _STRING, '0'),
        ('bilaplacian_f2', _STRING, '0'),
        ('bilaplacian_f3', _STRING, '0'),
    )),
    ('ForcingParameters', (
        ('f1', _STRING, '0'),
        ('f2', _STRING, '0'),
        ('f3', _STRING, '0'),
    )),
    ('PreprocessParameters', (
        ('enabled', _BOOL, 'true'),
        ('sigma_rule', _ENUM, 'SigmaRule:SIGMA_ZERO'),
        ('sigma', _DOUBLE, '0'),
        ('tau', _DOUBLE, '-1'),
        ('max_steps', _INT32, '200'),
        ('abs_tol', _DOUBLE, '1e-08'),
        ('c_stop', _DOUBLE, '1'),
        ('samples', _INT32, '200'),
        ('cp', _DOUBLE, '-1'),
        ('cp_tilde', _DOUBLE, '-1'),
        ('max_halvings', _INT32, '20'),
    )),
    ('FlowParameters', (
        ('tau_rule', _ENUM, 'TauRule:TAU_H'),
        ('tau', _DOUBLE, '0'),
        ('tol', _DOUBLE, '-1'),
        ('max_steps', _INT32, '1000'),
        ('epsilon0', _DOUBLE, '-1'),
        ('solver', _ENUM, 'KKTSolverKind:DIRECT'),
        ('minres_max_iterations', _INT32, '5000'),
        ('perturbation', _DOUBLE, '0'),
        ('stationarity_samples', _INT32, '50'),
    )),
    ('OutputParameters', (
        ('directory', _STRING, 'ldg_output'),
        ('seed', _INT32, '0'),
        ('write_vtk', _BOOL, 'true'),
        ('vtk_every', _INT32, '0'),
        ('dump_matrices', _BOOL, 'false'),
    )),
    ('RunParameters', (
        ('mesh', _MESSAGE, 'MeshParameters'),
        ('discretization', _MESSAGE, 'DiscretizationParameters'),
        ('material', _MESSAGE, 'MaterialParameters'),
        ('metric', _MESSAGE, 'MetricParameters'),
        ('boundary', _MESSAGE, 'BoundaryParameters'),
        ('forcing', _MESSAGE, 'ForcingParameters'),
        ('preprocess', _MESSAGE, 'PreprocessParameters'),
        ('flow', _MESSAGE, 'FlowParameters'),
        ('output', _MESSAGE, 'OutputParameters'),
    )),
    ('StepRecord', (
        ('stage', _STRING, ''),
        ('step', _INT32, '0'),
        ('E_h', _DOUBLE, '0'),
        ('E_s', _DOUBLE, '0'),
        ('E_b', _DOUBLE, '0'),
        ('D_h', _DOUBLE, '0'),
        ('incr_norm', _DOUBLE, '0'),
        ('incr_gradient_norm', _DOUBLE, '0'),
        ('tau', _DOUBLE, '0'),
        ('kkt_residual', _DOUBLE, '0'),
        ('constraint_residual', _DOUBLE, '0'),
        ('deficiency', _INT32, '0'),
        ('c_h', _DOUBLE, '0'),
        ('rejections', _INT32, '0'),
        ('mean_drift', _DOUBLE, '0'),
    )),
    ('Certificate', (
        ('name', _STRING, ''),
        ('passed', _BOOL, 'false'),
        ('skipped', _BOOL, 'false'),
        ('reason', _STRING, ''),
        ('value', _DOUBLE, '0'),
        ('bound', _DOUBLE, '0'),
        ('failing_step', _INT32, '-1'),
    )),
    ('CertificateReport', (
        ('certificates', _MESSAGE, 'Certificate', True),
        ('passed', _BOOL, 'false'),
        ('beta', _DOUBLE, '0'),
        ('poincare_constant', _DOUBLE, '0'),
        ('mode', _ENUM, 'BoundaryMode:FREE'),
    )),
    ('RefinementRow', (
        ('level', _INT32, '0'),
        ('h_max', _DOUBLE, '0'),
        ('hessian_error', _DOUBLE, '-1'),
        ('hessian_rate', _DOUBLE, '0'),
        ('defect', _DOUBLE, '-1'),
        ('defect_rate', _DOUBLE, '0'),
        ('energy', _DOUBLE, '-1'),
        ('flow_energy', _DOUBLE, '0'),
        ('flow_defect', _DOUBLE, '0'),
        ('flow_defect_rate', _DOUBLE, '0'),
        ('boundary_jump', _DOUBLE, '0'),
        ('beta', _DOUBLE, '0'),
    )),
    ('RunSummary', (
        ('frobenius', _DOUBLE, '0'),
        ('trace', _DOUBLE, '0'),
        ('gradient_jump', _DOUBLE, '0'),
        ('value_jump', _DOUBLE, '0'),
        ('forcing', _DOUBLE, '0'),
        ('E_h', _DOUBLE, '0'),
        ('E_s', _DOUBLE, '0'),
        ('E_b', _DOUBLE, '0'),
        ('D_h', _DOUBLE, '0'),
        ('preprocess_steps', _INT32, '0'),
        ('preprocess_converged', _BOOL, 'false'),
        ('main_steps', _INT32, '0'),
        ('main_converged', _BOOL, 'false'),
        ('certificates_passed', _BOOL, 'false'),
        ('rows', _MESSAGE, 'RefinementRow', True),
        ('note', _STRING, ''),
        ('wall_time', _DOUBLE, '0'),
    )),
)


def _build_file():
    proto = descriptor_pb2.FileDescriptorProto(
        name='ldgplates/parameters/parameters.proto', package=_PACKAGE, syntax='proto2')
    for name, values in _ENUMS:
        enum = proto.enum_type.add(name=name)
        for number, value in enumerate(values):
            enum.value.add(name=value, number=number)
    for name, fields in _MESSAGES:
        message = proto.message_type.add(name=name)
        for number, spec in enumerate(fields, 1):
            field_name, field_type, default = spec[:3]
            repeated = len(spec) > 3 and spec[3]
            field = message.field.add(name=field_name, number=number, type=field_type,
                                      label=_F.LABEL_REPEATED if repeated
                                      else _F.LABEL_OPTIONAL)
            if field_type == _MESSAGE:
                field.type_name = '.%s.%s' % (_PACKAGE, default)
            elif field_type == _ENUM:
                enum_name, value = default.split(':')
                field.type_name = '.%s.%s' % (_PACKAGE, enum_name)
                field.default_value = value
            elif default:
                field.default_value = default
    return proto


DESCRIPTOR = _descriptor_pool.Default().AddSerializedFile(
    _build_file().SerializeToString())

_builder.BuildMessageAndEnumDescriptors(DESCRIPTOR, globals())
_builder.BuildTopDescriptorsAndMessages(DESCRIPTOR, 'ldgplates.parameters.parameters_pb2',
                                        globals())
