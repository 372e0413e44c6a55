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

from ldgplates import mesh
from ldgplates.cli.commands import command_base
from ldgplates.utils import logging


class Mesh(command_base.CommandBase):
    '''writes a structured mesh, spec x0,y0,x1,y1:nx,ny:tri|quad[:dirichlet=left+top]'''

    default_arguments = (
        ('spec', {
            'metavar': 'SPEC',
            'type': str,
            'help': 'structured mesh spec, e.g. 0,0,1,1:8,8:tri:dirichlet=left'}),
        ('-o', {
            'dest': 'output',
            'type': str,
            'metavar': 'FILE',
            'required': True,
            'help': 'mesh file to write'}),
        ('--refinements', {
            'dest': 'refinements',
            'type': int,
            'metavar': 'N',
            'default': 0,
            'help': 'uniform refinements applied to the mesh (default: 0)'}),
    )

    def run(self):
        m = mesh.parse_structured_spec(self._args.spec)
        for _ in range(self._args.refinements):
            m = mesh.refine_uniformly(m)
        mesh.save_mesh(self._args.output, m)
        logging.info('Wrote %s with %d element(s) to %s', m, m.get_num_elements(),
                     self._args.output)
        return 0
