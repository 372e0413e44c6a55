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

from ldgplates import config
from ldgplates import frontend
from ldgplates.cli.commands import command_base

CONFIG_ARGUMENT = ('config', {
    'metavar': 'CONFIG',
    'type': str,
    'help': 'run configuration file'})
OUTPUT_ARGUMENT = ('--output', {
    'dest': 'output',
    'type': str,
    'metavar': 'DIR',
    'default': None,
    'help': 'output directory, overrides [output] directory'})

CONFIG_EPILOG = 'configuration keys and their defaults:\n\n' + config.describe_defaults()


class Run(command_base.CommandBase):
    '''runs preprocessing, the main flow and the certificates'''

    default_arguments = (CONFIG_ARGUMENT, OUTPUT_ARGUMENT)
    epilog = CONFIG_EPILOG

    def run(self):
        result = frontend.run(self.load_parameters())
        summary = result.get_summary()
        stream = sys.stdout
        stream.write('E_h = %.12g\nD_h = %.12g\n' % (summary.E_h, summary.D_h))
        stream.write('preprocessing steps = %d\nmain flow steps = %d\n'
                     % (summary.preprocess_steps, summary.main_steps))
        for certificate in result.get_report().certificates:
            verdict = ('skipped' if certificate.skipped else
                       'passed' if certificate.passed else 'FAILED')
            stream.write('%-28s %s\n' % (certificate.name, verdict))
        return result.get_exit_code()
