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

"""Run pipeline: parameters in, certified deformation and output files out.

A run builds the discrete problem from :class:`~ldgplates.parameters.RunParameters`,
computes the initial guess (bi-Laplacian solve with Dirichlet data, flat
deformation otherwise), optionally runs the metric preprocessing flow, runs
the main constrained flow and evaluates the certificates.
"""

import os
import timeit

import numpy

from ldgplates import config as config_lib
from ldgplates import dg
from ldgplates import energy as energy_lib
from ldgplates import expressions
from ldgplates import flows
from ldgplates import formats
from ldgplates import graphs
from ldgplates import lifting
from ldgplates import mesh as mesh_lib
from ldgplates import parameters
from ldgplates import solver
from ldgplates.dg import inequalities
from ldgplates.energy import defect
from ldgplates.parameters import parameters_pb2
from ldgplates.utils import logging

EXIT_OK = 0
EXIT_CERTIFICATE_FAILED = 1
EXIT_INPUT_ERROR = 2

STEPS_FILENAME = 'steps.csv'
SUMMARY_FILENAME = 'summary.json'
CERTIFICATES_FILENAME = 'certificates.json'
SURFACE_FILENAME = 'surface_%d.vtk'
BENDING_MATRIX_FILENAME = 'bending_matrix.txt'
CONSTRAINT_MATRIX_FILENAME = 'constraint_matrix.txt'

DEFAULT_TOL_FACTOR = 1e-8
DEFAULT_CHECK_SAMPLES = 100


class Error(Exception):
    pass


# Errors caused by the configuration or the input files.
INPUT_ERRORS = (parameters.Error, config_lib.Error, mesh_lib.Error, expressions.Error,
                energy_lib.Error, dg.Error, lifting.Error, Error, ValueError,
                IOError)


def _optional(value):
    '''Negative sentinels of the parameter messages select computed defaults.'''
    return None if value < 0 else value


def _is_zero(texts):
    return all(text.strip() == '0' for text in texts)


def optional_vector_function(texts):
    '''Callable ``(N, 2) -> (N, c)`` of the expressions, ``None`` if all are zero.'''
    if _is_zero(texts):
        return None
    return expressions.vector_function(texts)


def dirichlet_sides(text):
    return tuple(side.strip() for side in text.replace(',', '+').split('+')
                 if side.strip())


def build_mesh(params):
    '''Loads or builds the mesh of a run and refines it uniformly.'''
    section = params.mesh
    if section.path:
        mesh = mesh_lib.load_mesh(section.path)
    else:
        kind = mesh_lib.QUAD if section.kind == parameters_pb2.QUAD else mesh_lib.TRI
        mesh = mesh_lib.build_structured_mesh(
            ((section.x0, section.y0), (section.x1, section.y1)), section.nx, section.ny,
            kind, dirichlet_sides(section.dirichlet_sides))
    for _ in range(section.refinements):
        mesh = mesh_lib.refine_uniformly(mesh)
    return mesh


def build_metric(params):
    section = params.metric
    name = section.name.strip().lower()
    if name == 'expression':
        return energy_lib.expression_metric(section.g11, section.g12, section.g22)
    if name == 'stretched':
        return energy_lib.stretched_metric(section.beta)
    return energy_lib.get_metric(name)


def dirichlet_expressions(params):
    boundary = params.boundary
    return [expressions.parse_expression(text)
            for text in (boundary.phi1, boundary.phi2, boundary.phi3)]


def build_energy_params(params):
    material = params.material
    forcing = params.forcing
    load = optional_vector_function((forcing.f1, forcing.f2, forcing.f3))
    if not params.is_dirichlet():
        return energy_lib.EnergyParams(material.mu, material.lam, material.gamma0,
                                       material.gamma1, load)
    phi = dirichlet_expressions(params)
    return energy_lib.EnergyParams(material.mu, material.lam, material.gamma0,
                                   material.gamma1, load, mesh_lib.DIRICHLET,
                                   expressions.vector_function(phi),
                                   expressions.vector_gradient(phi))


class Problem(object):
    '''Discrete setting of a run: space, skeleton, lifting, metric and energy.

    :param params: Validated :class:`~ldgplates.parameters.RunParameters`.
    :param mesh: Mesh to discretize; built from `params` when omitted.
    '''

    def __init__(self, params, mesh=None):
        start = timeit.default_timer()
        self._params = params
        self._mesh = build_mesh(params) if mesh is None else mesh
        if params.is_dirichlet() and not self._mesh.has_dirichlet_edges():
            raise Error('Dirichlet mode needs a mesh with Dirichlet edges')
        components = graphs.DualGraph(self._mesh).get_components()
        if len(components) > 1:
            raise Error('Mesh has %d disconnected components' % len(components))
        section = params.discretization
        self._space = dg.DGSpace(self._mesh, section.degree,
                                 _optional(section.quadrature_degree),
                                 _optional(section.edge_quadrature_degree))
        self._skeleton = dg.Skeleton(self._space, params.is_dirichlet())
        self._assembly = lifting.LiftingAssembly(self._space, self._skeleton,
                                                 _optional(section.lifting_degree_r),
                                                 _optional(section.lifting_degree_b))
        self._metric = build_metric(params)
        self._energy_params = build_energy_params(params)
        self._energy = energy_lib.BendingEnergy.from_params(self._energy_params,
                                                            self._assembly, self._metric)
        logging.info('Built %s with %d element(s) and %d dof(s) per component in %f second(s)',
                     self, self._mesh.get_num_elements(), self._space.get_num_dofs(),
                     timeit.default_timer() - start)

    def get_params(self):
        return self._params

    def get_mesh(self):
        return self._mesh

    def get_space(self):
        return self._space

    def get_skeleton(self):
        return self._skeleton

    def get_assembly(self):
        return self._assembly

    def get_metric(self):
        return self._metric

    def get_energy_params(self):
        return self._energy_params

    def get_energy(self):
        return self._energy

    def get_boundary_mode(self):
        return mesh_lib.DIRICHLET if self._params.is_dirichlet() else mesh_lib.FREE

    def get_dirichlet_hessian(self):
        '''Callable ``(N, 2) -> (N, 3, 2, 2)`` of the Hessians of phi, ``None``
        with free boundaries.
        '''
        if not self._params.is_dirichlet():
            return None
        return expressions.vector_hessian(dirichlet_expressions(self._params))

    def preprocess_energy(self, sigma):
        return energy_lib.PreprocessEnergy(self._assembly, self._metric, sigma,
                                           self._energy_params.get_dirichlet_data())

    def initial_guess(self):
        '''Bi-Laplacian solution in Dirichlet mode, flat deformation otherwise,
        plus the configured smooth perturbation.
        '''
        params = self._params
        if params.is_dirichlet():
            boundary = params.boundary
            material = params.material
            load = optional_vector_function((boundary.bilaplacian_f1, boundary.bilaplacian_f2,
                                             boundary.bilaplacian_f3))
            y = flows.bilaplacian_init(self._assembly, material.gamma0_hat,
                                       material.gamma1_hat,
                                       self._energy_params.get_dirichlet_data(), load)
        else:
            y = flows.flat_initial_guess(self._space, self._metric)
        perturbation = params.flow.perturbation
        if perturbation > 0.0:
            rng = numpy.random.default_rng(params.output.seed)
            y = y + perturbation * inequalities.sample_smooth_field(
                self._space, rng, energy_lib.NUM_COMPONENTS)
        return y

    def __str__(self):
        return '%s[kind=%s, degree=%d, metric=%s, mode=%s]' % (
            self.__class__.__name__, self._mesh.get_kind(), self._space.get_degree(),
            self._metric.get_name(), self.get_boundary_mode())


def preprocess_config(params, mesh):
    section = params.preprocess
    h_max = mesh.get_h_max()
    tau = _optional(section.tau)
    return flows.PreprocessConfig(
        sigma=flows.sigma_for_rule(section.sigma_rule, h_max, section.sigma),
        tau=h_max if tau is None else tau, max_steps=section.max_steps,
        abs_tol=section.abs_tol, c_stop=section.c_stop, samples=section.samples,
        cp=_optional(section.cp), cp_tilde=_optional(section.cp_tilde),
        max_halvings=section.max_halvings, seed=params.output.seed)


def flow_config(params, mesh, initial_energy):
    '''Main flow configuration; tau = h_max under the h rule and the default
    tolerance scales with the initial energy.
    '''
    section = params.flow
    tau = mesh.get_h_max() if section.tau_rule == parameters_pb2.TAU_H else section.tau
    tol = _optional(section.tol)
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * numpy.sqrt(1.0 + abs(initial_energy))
    mode = mesh_lib.DIRICHLET if params.is_dirichlet() else mesh_lib.FREE
    return flows.FlowConfig(tau, tol, section.max_steps, _optional(section.epsilon0), mode,
                            solver_id=section.solver,
                            minres_max_iterations=section.minres_max_iterations,
                            stationarity_samples=section.stationarity_samples,
                            seed=params.output.seed)


class Frontend(object):
    '''Runs the whole pipeline for one set of parameters.

    Output files go to ``params.output.directory``; an empty directory
    disables them.
    '''

    def __init__(self, params):
        if not isinstance(params, parameters.RunParameters):
            raise TypeError('params must be RunParameters: %s' % type(params))
        self._params = params
        self._problem = None
        self._preprocess_result = None
        self._state = None
        self._report = None
        self._summary = None
        self._records = []

    def get_params(self):
        return self._params

    def get_problem(self):
        return self._problem

    def get_preprocess_result(self):
        return self._preprocess_result

    def get_state(self):
        return self._state

    def get_report(self):
        return self._report

    def get_summary(self):
        return self._summary

    def get_records(self):
        '''Preprocessing and main flow step records in execution order.'''
        return self._records

    def get_exit_code(self):
        if self._report is None:
            raise Error('The pipeline has not been run')
        return EXIT_OK if self._report.passed else EXIT_CERTIFICATE_FAILED

    def _output_path(self, filename):
        directory = self._params.output.directory
        return os.path.join(directory, filename) if directory else None

    def _write_surface(self, step, y):
        output = self._params.output
        path = self._output_path(SURFACE_FILENAME % step)
        if path is None or not output.write_vtk:
            return
        metric = self._problem.get_metric()
        formats.write_surface(path, y, dict(
            defect_density=defect.defect_density(y, metric),
            bending_density=self._problem.get_energy().density(y)))
        logging.debug('Wrote %s', path)

    def run(self, problem=None):
        '''Runs the pipeline.

        :param problem: Prebuilt :class:`Problem`; built from the parameters
          when omitted.
        :returns: The exit code, 0 when every certificate passes and 1 otherwise.
        :raises: one of :data:`INPUT_ERRORS` on invalid input, or
          :exc:`~ldgplates.flows.Error` when a flow fails.
        '''
        start = timeit.default_timer()
        params = self._params.validate()
        self._problem = problem = Problem(params) if problem is None else problem
        directory = params.output.directory
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)
        y = problem.initial_guess()
        mesh = problem.get_mesh()
        stretching = problem.preprocess_energy(0.0)
        if params.preprocess.enabled:
            config = preprocess_config(params, mesh)
            self._preprocess_result = flows.run_preprocess(
                config, problem.preprocess_energy(config.sigma), y)
            y = self._preprocess_result.y
            self._records.extend(self._preprocess_result.records)
        energy = problem.get_energy()
        config = flow_config(params, mesh, energy.energy(y))
        self._write_surface(0, y)
        preprocess_energies = {}
        every = params.output.vtk_every

        def on_step(n, iterate):
            preprocess_energies[n] = stretching.energies(iterate)
            if every > 0 and n % every == 0:
                self._write_surface(n, iterate)

        self._state = state = flows.run_main_flow(config, energy, y, on_step)
        for record in state.records:
            energies = preprocess_energies[record.step]
            record.E_s = energies['E_s']
            record.E_b = energies['E_b']
        self._records.extend(state.records)
        if every <= 0 or state.get_num_steps() % every:
            self._write_surface(state.get_num_steps(), state.y)
        self._report = report = flows.flow_certificates(state)
        if self._preprocess_result is not None:
            report.certificates.extend(flows.preprocess_certificates(self._preprocess_result))
            report.passed = all(certificate.passed for certificate in report.certificates)
        self._summary = self._summarize(stretching, timeit.default_timer() - start)
        self._write_outputs()
        for certificate in report.certificates:
            log = logging.info if certificate.passed else logging.warning
            log('Certificate %s: %s', certificate.name,
                'skipped (%s)' % certificate.reason if certificate.skipped
                else 'passed' if certificate.passed else 'FAILED (%s)' % certificate.reason)
        logging.info('Run finished in %f second(s)', self._summary.wall_time)
        return self.get_exit_code()

    def _summarize(self, stretching, wall_time):
        state = self._state
        breakdown = self._problem.get_energy().breakdown(state.y)
        energies = stretching.energies(state.y)
        summary = parameters_pb2.RunSummary(
            frobenius=breakdown.frobenius, trace=breakdown.trace,
            gradient_jump=breakdown.gradient_jump, value_jump=breakdown.value_jump,
            forcing=breakdown.forcing, E_h=breakdown.total,
            E_s=energies['E_s'], E_b=energies['E_b'], D_h=state.get_final_defect(),
            main_steps=state.get_num_steps(), main_converged=state.converged,
            certificates_passed=self._report.passed, wall_time=wall_time)
        if self._preprocess_result is not None:
            summary.preprocess_steps = self._preprocess_result.get_num_steps()
            summary.preprocess_converged = self._preprocess_result.converged
        return summary

    def _write_outputs(self):
        if not self._params.output.directory:
            return
        formats.write_steps(self._output_path(STEPS_FILENAME), self._records).close()
        formats.write_message(self._output_path(SUMMARY_FILENAME), self._summary)
        formats.write_message(self._output_path(CERTIFICATES_FILENAME), self._report)
        if self._params.output.dump_matrices:
            solver.dump_matrix(self._output_path(BENDING_MATRIX_FILENAME),
                               self._problem.get_energy().matrix())
            solver.dump_matrix(self._output_path(CONSTRAINT_MATRIX_FILENAME),
                               defect.constraint_matrix(self._state.y))


def run(params):
    '''Runs the pipeline for `params`.

    :returns: A completed :class:`Frontend`; see :meth:`Frontend.get_exit_code`.
    '''
    frontend = Frontend(params)
    frontend.run()
    return frontend


def check(params, samples=DEFAULT_CHECK_SAMPLES):
    '''Runs the randomized diagnostics on the discrete problem of `params`.

    :returns: The :class:`Problem` and a list of ``(name, report)`` pairs with
      report dictionaries.
    '''
    params.validate()
    problem = Problem(params)
    seed = params.output.seed
    space = problem.get_space()
    assembly = problem.get_assembly()
    material = params.material
    y0 = problem.initial_guess()
    reports = [
        ('mesh', mesh_lib.shape_regularity_report(problem.get_mesh())),
        ('functional_inequalities', inequalities.functional_inequality_check(
            space, samples, seed, problem.get_skeleton())),
        ('lifting_stability', lifting.lifting_stability_ratios(assembly, samples, seed)),
        ('seminorm_equivalence', lifting.seminorm_equivalence_check(
            assembly, material.gamma0, material.gamma1, samples, seed)),
        ('coercivity', energy_lib.coercivity_check(problem.get_energy(), samples, seed)),
        ('gradient_estimate', energy_lib.gradient_estimate_check(y0, problem.get_metric())),
        ('infsup', dict(beta=flows.estimate_infsup(assembly, y0))),
    ]
    metric = problem.get_metric()
    if metric.has_immersion():
        reports.append(('continuous_energy', energy_lib.continuous_energy_check(
            metric.get_immersion(), metric, material.mu, material.lam, space)))
    return problem, reports
