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

"""Refinement studies and parameter sweeps.

A refinement study reports interpolant errors, defects and flow results over
uniformly refined meshes, with empirical rates from successive levels.
"""

import csv
import math
import os
import timeit

import numpy

from ldgplates import config as config_lib
from ldgplates import frontend
from ldgplates import formats
from ldgplates import mesh as mesh_lib
from ldgplates.energy import bending
from ldgplates.energy import defect
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import logging

STUDY_CSV_FILENAME = 'study.csv'
STUDY_JSON_FILENAME = 'study.json'
LEVEL_DIRECTORY = 'level_%d'
SWEEP_CSV_FILENAME = 'sweep.csv'
SWEEP_DIRECTORY = 'sweep_%d'
SWEEP_COLUMNS = ('value', 'E_h', 'D_h', 'main_steps', 'exit_code')

NO_IMMERSION_NOTE = ('metric %s has no analytic immersion: interpolant columns '
                     'are not available')


def empirical_rate(e_coarse, e_fine, h_coarse, h_fine):
    '''log(e_coarse / e_fine) / log(h_coarse / h_fine), 0 when undefined.'''
    if e_coarse <= 0.0 or e_fine <= 0.0 or h_coarse == h_fine:
        return 0.0
    return math.log(e_coarse / e_fine) / math.log(h_coarse / h_fine)


def boundary_jump_norm(energy, y):
    '''||[y]||_{L^2} over the Dirichlet boundary, jumps taken against the data.'''
    skeleton = energy.get_assembly().get_skeleton()
    if not skeleton.includes_dirichlet():
        return 0.0
    value_data, grad_data = energy.get_jump_data()
    traces = skeleton.trace_data(y, value_data, grad_data)
    mask = skeleton.get_boundary_mask()
    weights = skeleton.get_weights()[mask]
    return float(numpy.sqrt((weights * (traces.jump[:, mask] ** 2).sum(axis=0)).sum()))


def interpolant_target(problem):
    '''Value and Hessian callables of the deformation whose interpolant fills
    the study columns: the Dirichlet data phi in Dirichlet mode, the analytic
    immersion of the metric otherwise. ``None`` when neither exists.
    '''
    if problem.get_params().is_dirichlet():
        value, _ = problem.get_energy_params().get_dirichlet_data()
        return value, problem.get_dirichlet_hessian()
    metric = problem.get_metric()
    if not metric.has_immersion():
        return None
    immersion = metric.get_immersion()
    return immersion.value, immersion.hessian


def interpolant_columns(problem, row, target):
    '''Fills the Hessian error, defect and energy of the interpolant of
    `target`, a pair of value and Hessian callables.
    '''
    value, hessian_of = target
    energy = problem.get_energy()
    y = problem.get_space().interpolate(value, bending.NUM_COMPONENTS)
    value_data, grad_data = energy.get_jump_data()
    hessian = problem.get_assembly().discrete_hessian(y, value_data, grad_data)
    row.hessian_error = hessian.l2_distance(hessian_of)
    row.defect = defect.metric_defect(y, problem.get_metric())
    row.energy = energy.energy(y)


def fill_rates(rows):
    for coarse, fine in zip(rows, rows[1:]):
        for error, rate in (('hessian_error', 'hessian_rate'), ('defect', 'defect_rate'),
                            ('flow_defect', 'flow_defect_rate')):
            setattr(fine, rate, empirical_rate(getattr(coarse, error), getattr(fine, error),
                                               coarse.h_max, fine.h_max))


def _level_params(params, level):
    level_params = params.copy()
    directory = params.output.directory
    level_params.output.directory = (os.path.join(directory, LEVEL_DIRECTORY % level)
                                     if directory else '')
    return level_params


class RefinementStudy(object):
    '''Runs a problem on `levels` uniformly refined meshes.

    :param params: :class:`~ldgplates.parameters.RunParameters`; the mesh
      they describe is level 0.
    :param levels: Number of levels, at least 2.
    :param run_flows: Whether to run the full pipeline on every level.
    '''

    def __init__(self, params, levels, run_flows=True):
        if levels < 2:
            raise ValueError('A refinement study needs at least 2 levels: %d' % levels)
        self._params = params
        self._levels = levels
        self._run_flows = run_flows
        self._summary = None
        self._exit_codes = []

    def get_summary(self):
        return self._summary

    def get_rows(self):
        return list(self._summary.rows)

    def get_exit_code(self):
        if self._summary is None:
            raise frontend.Error('The study has not been run')
        return max(self._exit_codes or [frontend.EXIT_OK])

    def run(self):
        '''Runs every level.

        :returns: A :class:`~ldgplates.parameters.parameters_pb2.RunSummary`
          carrying the rows and, without an analytic immersion, a note.
        '''
        start = timeit.default_timer()
        params = self._params.validate()
        summary = parameters_pb2.RunSummary()
        mesh = frontend.build_mesh(params)
        for level in range(self._levels):
            if level:
                mesh = mesh_lib.refine_uniformly(mesh)
            level_params = _level_params(params, level)
            problem = frontend.Problem(level_params, mesh)
            row = summary.rows.add(level=level, h_max=mesh.get_h_max())
            target = interpolant_target(problem)
            if target is not None:
                interpolant_columns(problem, row, target)
            elif not summary.note:
                summary.note = NO_IMMERSION_NOTE % problem.get_metric().get_name()
                logging.warning(summary.note)
            if self._run_flows:
                self._run_level(level_params, problem, row)
            logging.info('Level %d: h_max=%g, hessian_error=%g, defect=%g, energy=%g',
                         level, row.h_max, row.hessian_error, row.defect, row.energy)
        fill_rates(summary.rows)
        summary.wall_time = timeit.default_timer() - start
        self._summary = summary
        self._write_outputs()
        logging.info('Refinement study of %d level(s) finished in %f second(s)',
                     self._levels, summary.wall_time)
        return summary

    def _run_level(self, params, problem, row):
        runner = frontend.Frontend(params)
        self._exit_codes.append(runner.run(problem))
        state = runner.get_state()
        row.flow_energy = runner.get_summary().E_h
        row.flow_defect = runner.get_summary().D_h
        row.boundary_jump = boundary_jump_norm(problem.get_energy(), state.y)
        row.beta = runner.get_report().beta

    def _write_outputs(self):
        directory = self._params.output.directory
        if not directory:
            return
        if not os.path.isdir(directory):
            os.makedirs(directory)
        formats.write_study(os.path.join(directory, STUDY_CSV_FILENAME),
                            self._summary.rows)
        formats.write_message(os.path.join(directory, STUDY_JSON_FILENAME), self._summary)


def refinement_study(params, levels, run_flows=True):
    '''Runs a :class:`RefinementStudy` and returns it.'''
    study = RefinementStudy(params, levels, run_flows)
    study.run()
    return study


def _sweep_params(params, assignment, index):
    sweep_params = config_lib.apply_override(params.copy(), assignment)
    directory = params.output.directory
    sweep_params.output.directory = (os.path.join(directory, SWEEP_DIRECTORY % index)
                                     if directory else '')
    return sweep_params.validate()


def parameter_sweep(params, key, values):
    '''Runs the pipeline once per value of the configuration key `key`
    (``section.key``) and writes sweep.csv to the output directory.

    :returns: A list of ``(value, frontend)`` pairs.
    :raises: :exc:`ValueError` for an unknown key or an invalid value.
    '''
    if not values:
        raise ValueError('A sweep needs at least one value')
    start = timeit.default_timer()
    assignments = ['%s=%s' % (key, value) for value in values]
    # All values are parsed before the first run.
    sweeps = [_sweep_params(params, assignment, i) for i, assignment in enumerate(assignments)]
    results = []
    for value, sweep_params in zip(values, sweeps):
        runner = frontend.Frontend(sweep_params)
        runner.run()
        summary = runner.get_summary()
        logging.info('%s=%s: E_h=%g, D_h=%g, exit code %d', key, value, summary.E_h,
                     summary.D_h, runner.get_exit_code())
        results.append((value, runner))
    directory = params.output.directory
    if directory:
        if not os.path.isdir(directory):
            os.makedirs(directory)
        with open(os.path.join(directory, SWEEP_CSV_FILENAME), 'w', newline='') as stream:
            write_sweep(stream, results)
    logging.info('Sweep of %s over %d value(s) finished in %f second(s)', key, len(values),
                 timeit.default_timer() - start)
    return results


def write_sweep(stream, results):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(SWEEP_COLUMNS)
    for value, runner in results:
        summary = runner.get_summary()
        writer.writerow((value, '%.17g' % summary.E_h, '%.17g' % summary.D_h, summary.main_steps,
                         runner.get_exit_code()))
