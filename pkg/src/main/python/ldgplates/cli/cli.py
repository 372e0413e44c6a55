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

import argparse
import inspect
import pkgutil
import re
import sys

from ldgplates import flows
from ldgplates import frontend
from ldgplates.cli import commands
from ldgplates.cli.commands import command_base
from ldgplates.utils import logging

DEFAULT_LOGGING_LEVEL = 'INFO'
LOGGING_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

EPILOG = ('Exit status is 0 when every certificate passes, 1 when a certificate '
          'or a flow fails and 2 on configuration or input errors.')


def _camel_case_to_lower_case_underscore(s):
    '''Converts camel case to lower case underscore, e.g. "RefinementStudy"
    to "refinement_study".'''
    s1 = re.sub('(.)([A-Z][a-z]+)', r'\1_\2', s)
    return re.sub('([a-z0-9])([A-Z])', r'\1_\2', s1).lower()


class CLI(object):
    '''Command-line interface of ``ldg-plates``.

    Commands are discovered in :mod:`ldgplates.cli.commands`: every
    :class:`~ldgplates.cli.commands.command_base.CommandBase` subclass becomes
    a subcommand named after the class.
    '''

    def __init__(self):
        self._argparser = argparse.ArgumentParser(prog='ldg-plates', epilog=EPILOG)
        self._argparser.add_argument('--logging-level', dest='logging_level', type=str,
                                     metavar='LEVEL', default=DEFAULT_LOGGING_LEVEL,
                                     help=('logging level for the messages such as %s '
                                           '(default: %s)' % (', '.join(LOGGING_LEVELS),
                                                              DEFAULT_LOGGING_LEVEL)))
        self._argsubparsers = None
        self._cmds = {}
        self._discover_commands()

    def _discover_commands(self):
        for _, mod, is_pkg in pkgutil.iter_modules(commands.__path__):
            if is_pkg:
                continue
            fq_module = '.'.join([commands.__name__, mod])
            __import__(fq_module)
            for (_, cls) in inspect.getmembers(sys.modules[fq_module], inspect.isclass):
                if (issubclass(cls, command_base.CommandBase) and
                        cls is not command_base.CommandBase and
                        cls.__module__ == fq_module):
                    self.add_command_class(cls)

    def add_command_class(self, cls):
        '''Registers new command class. The command name will be equal to the class
        name converted from camel case to underscore case. The command will have own
        argument parser instance that it has to setup.
        '''
        if not self._argsubparsers:
            self._argsubparsers = self._argparser.add_subparsers(dest='command',
                                                                 help='command help')
            self._argsubparsers.required = True
        name = _camel_case_to_lower_case_underscore(cls.__name__)
        argparser = self._argsubparsers.add_parser(
            name, help=cls.__doc__, epilog=getattr(cls, 'epilog', EPILOG),
            formatter_class=argparse.RawDescriptionHelpFormatter)
        cls.setup_argparser(argparser)
        argparser.set_defaults(_command_class=cls)
        self._cmds[name] = cls

    def fail(self, message):
        sys.stderr.write('ldg-plates: %s\n' % message)
        return frontend.EXIT_INPUT_ERROR

    def run(self, argv=sys.argv):
        '''Parses `argv` and runs the selected command.

        :returns: The exit code of the command.
        '''
        try:
            self._args = self._argparser.parse_args(argv[1:])
        except SystemExit as e:
            return frontend.EXIT_INPUT_ERROR if e.code else frontend.EXIT_OK
        level = self._args.logging_level.upper()
        if level not in LOGGING_LEVELS:
            return self.fail('Unknown logging level: %s' % self._args.logging_level)
        logging.get_logger().setLevel(getattr(logging, level))
        cmd = self._args._command_class(args=self._args)
        try:
            return cmd.run()
        except frontend.INPUT_ERRORS as e:
            logging.debug('Input error', exc_info=True)
            return self.fail(e)
        except flows.Error:
            logging.exception('Flow failed')
            return frontend.EXIT_CERTIFICATE_FAILED
        except KeyboardInterrupt:
            cmd.cleanup()
            return frontend.EXIT_CERTIFICATE_FAILED

    def get_commands_names(self):
        '''Returns a copy of list with all commands names.'''
        return sorted(self._cmds.keys())
