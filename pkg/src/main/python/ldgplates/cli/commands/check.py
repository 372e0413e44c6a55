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

from ldgplates import frontend
from ldgplates.cli.commands import command_base
from ldgplates.cli.commands import run


def _format(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '-'
    if isinstance(value, float):
        return '%.6g' % value
    return str(value)


class Check(command_base.CommandBase):
    '''runs the randomized diagnostics and the run certificates'''

    default_arguments = (
        run.CONFIG_ARGUMENT,
        ('--samples', {
            'dest': 'samples',
            'type': int,
            'metavar': 'N',
            'default': frontend.DEFAULT_CHECK_SAMPLES,
            'help': 'random fields per diagnostic (default: %d)'
                    % frontend.DEFAULT_CHECK_SAMPLES}),
    )
    epilog = run.CONFIG_EPILOG

    def run(self):
        params = self.load_parameters()
        params.output.directory = ''
        problem, reports = frontend.check(params, self._args.samples)
        stream = sys.stdout
        for name, report in reports:
            for key in sorted(report):
                stream.write('%-24s %-26s %s\n' % (name, key, _format(report[key])))
        runner = frontend.Frontend(params)
        code = runner.run(problem)
        for certificate in runner.get_report().certificates:
            stream.write('%-24s %-26s %s\n' % (
                'certificate', certificate.name,
                'skipped' if certificate.skipped else _format(certificate.passed)))
        return code
