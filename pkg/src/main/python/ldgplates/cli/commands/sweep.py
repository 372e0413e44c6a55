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

from ldgplates import study
from ldgplates.cli.commands import command_base
from ldgplates.cli.commands import run


class Sweep(command_base.CommandBase):
    '''runs the pipeline once per value of one configuration key'''

    default_arguments = (
        run.CONFIG_ARGUMENT,
        run.OUTPUT_ARGUMENT,
        ('--key', {
            'dest': 'key',
            'type': str,
            'required': True,
            'metavar': 'SECTION.KEY',
            'help': 'configuration key to vary, e.g. metric.beta'}),
        ('values', {
            'metavar': 'VALUE',
            'nargs': '+',
            'help': 'values of the key'}),
    )
    epilog = run.CONFIG_EPILOG

    def run(self):
        results = study.parameter_sweep(self.load_parameters(), self._args.key,
                                        self._args.values)
        study.write_sweep(sys.stdout, results)
        return max(runner.get_exit_code() for _, runner in results)
