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

"""Legacy ASCII VTK export of deformed surfaces.

Every element contributes its own corner points, so the discontinuous
iterate is drawn without averaging.
"""

import meshio
import numpy

from ldgplates import mesh as mesh_lib

CELL_TYPES = {mesh_lib.TRI: 'triangle', mesh_lib.QUAD: 'quad'}


def surface_mesh(y, element_data=None):
    '''Builds a :class:`meshio.Mesh` of the corner values of `y`.

    :param y: 3-component :class:`~ldgplates.dg.DGField`.
    :param element_data: Optional mapping from names to per element values,
      exported as point data repeated at the corners of every element.
    '''
    if y.get_num_components() != 3:
        raise ValueError('Expected a 3-component field, got %d' % y.get_num_components())
    space = y.get_space()
    mesh = space.get_mesh()
    ne = mesh.get_num_elements()
    corners = space.get_reference_element().get_vertex_nodes()
    nb = space.get_num_local_dofs()
    local = y.get_coefficients().reshape(3, ne, nb)[:, :, corners]
    points = numpy.moveaxis(local, 0, -1).reshape(-1, 3)
    nv = len(corners)
    cells = numpy.arange(ne * nv).reshape(ne, nv)
    point_data = {}
    for name, values in (element_data or {}).items():
        values = numpy.asarray(values, dtype=float)
        if values.shape != (ne,):
            raise ValueError('%s must hold one value per element: %s' % (name, values.shape))
        point_data[name] = numpy.repeat(values, nv)
    return meshio.Mesh(points, [(CELL_TYPES[mesh.get_kind()], cells)],
                       point_data=point_data)


def write_surface(filename, y, element_data=None):
    meshio.write(filename, surface_mesh(y, element_data), file_format='vtk', binary=False)
