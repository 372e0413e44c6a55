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

import sys

from ldgplates import formats
from ldgplates import study
from ldgplates.cli.commands import command_base
from ldgplates.cli.commands import run

DEFAULT_LEVELS = 3


class Study(command_base.CommandBase):
    '''runs a refinement study and writes study.csv'''

    default_arguments = (
        run.CONFIG_ARGUMENT,
        run.OUTPUT_ARGUMENT,
        ('--levels', {
            'dest': 'levels',
            'type': int,
            'metavar': 'N',
            'default': DEFAULT_LEVELS,
            'help': 'number of refinement levels, at least 2 (default: %d)'
                    % DEFAULT_LEVELS}),
        ('--skip-flows', {
            'dest': 'skip_flows',
            'action': 'store_true',
            'help': 'only compute the interpolant columns'}),
    )
    epilog = run.CONFIG_EPILOG

    def run(self):
        result = study.refinement_study(self.load_parameters(), self._args.levels,
                                        not self._args.skip_flows)
        summary = result.get_summary()
        formats.write_study(sys.stdout, summary.rows)
        if summary.note:
            sys.stdout.write('# %s\n' % summary.note)
        return result.get_exit_code()
