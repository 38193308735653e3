"""The reproduce matrix and the check helpers shared with the CLI."""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable, Iterable, Iterator

from .catalog import (
    CatalogKey,
    Family,
    Forcing,
    Reading,
    build_equation,
    build_family,
    build_probes,
    closure_check,
    jacobi_check,
    key_space,
    printed_determining_system,
    schrodinger_space,
    schrodinger_subalgebra,
)
from .exceptions import InvalidCatalogKeyError
from .expr import JetSpace
from .flows import (
    FlowMap,
    FlowName,
    build_flow,
    map_generic_solution,
    potential_chain,
    verify_group_law,
    verify_lie_equations,
)
from .invariance import (
    DeterminingSystem,
    EquationSystem,
    ProofSolution,
    check_invariance,
    compare_systems,
    determining_ansatz,
    extract_determining,
    verify_proof_solution,
)
from .jetfield import VectorField
from .models import CheckItem, CheckReport
from .numeric import Grid1D, Mode, NumericRun, run_numeric
from .runner import CheckTask

__all__ = [
    "SECTIONS",
    "check_fields",
    "check_key",
    "extracted_system",
    "flow_report",
    "reproduce_tasks",
]

logger = logging.getLogger(__name__)

SECTIONS = (
    "sec2-theorem1",
    "sec2-determining",
    "sec2-flows",
    "sec2-potentials",
    "sec3-laplace",
    "sec3-heat",
    "sec3-wave",
    "sec3-hj",
    "sec3-kdv",
    "sec4-closure",
    "sec5-theorem2",
    "sec5-euler",
    "sec6-contact",
    "numeric",
)

DIMENSIONS = (1, 2, 3)

CHAIN_FLOWS = (
    FlowName.QB,
    FlowName.QA,
    FlowName.GALILEI,
    FlowName.DILATION,
    FlowName.PROJECTIVE,
)


def check_fields(
    fields: Iterable[VectorField],
    system: EquationSystem,
    *,
    max_passes: int | None = None,
    subject: str = "",
) -> CheckReport:
    """Check every field on the system and merge the reports."""
    fields = list(fields)
    reports = [check_invariance(field, system, max_passes=max_passes) for field in fields]
    subject = subject or f"{', '.join(f.name for f in fields)} on {system.name}"
    return CheckReport.merge(subject, reports)


def check_key(
    key: CatalogKey, *, exclude: Iterable[str] = (), max_passes: int | None = None
) -> CheckReport:
    """Check the listed algebra of a catalog key."""
    excluded = set(exclude)
    fields = [f for f in build_family(key) if f.name not in excluded]
    return check_fields(
        fields,
        build_equation(key),
        max_passes=max_passes,
        subject=f"algebra of {key.label}",
    )


def flow_report(flow: FlowMap) -> CheckReport:
    """Lie equations and group law of a flow."""
    return CheckReport.merge(
        f"flow {flow.name}", [verify_lie_equations(flow), verify_group_law(flow)]
    )


@functools.cache
def extracted_system(n: int) -> tuple[EquationSystem, DeterminingSystem]:
    """The Schrodinger system and its extracted determining equations."""
    system = build_equation(CatalogKey.create(Family.THEOREM1, n=n))
    return system, extract_determining(determining_ansatz(system.space), system)


def _rejects(family: Family, **kwargs: object) -> CheckReport:
    label = f"{family.value} {kwargs}"
    try:
        CatalogKey.create(family, **kwargs)  # type: ignore[arg-type]
    except InvalidCatalogKeyError as err:
        item = CheckItem(id="rejected", reduced=str(err))
    else:
        item = CheckItem(id="rejected", reduced="accepted", is_zero=False)
    return CheckReport.from_items(f"builder rejects {label}", [item])


def _key_tasks(section: str, key: CatalogKey) -> Iterator[CheckTask]:
    """The algebra of a key plus one negative task per probe."""
    probes = build_probes(key)
    names = {probe.name for probe in probes}
    yield CheckTask(
        id=f"{section}/{key.label}",
        section=section,
        run=functools.partial(check_key, key, exclude=names),
    )
    for probe in probes:
        yield CheckTask(
            id=f"{section}/{key.label}/probe-{probe.name}",
            section=section,
            run=functools.partial(_check_probe, key, probe),
            expect_fail=True,
        )


def _check_probe(key: CatalogKey, probe: VectorField) -> CheckReport:
    return check_fields([probe], build_equation(key))


def _flow_task(
    section: str, name: FlowName, space: JetSpace | None = None, label: str = ""
) -> CheckTask:
    def run() -> CheckReport:
        return flow_report(build_flow(name, space))

    return CheckTask(
        id=f"{section}/flow-{label or name.value}", section=section, run=run
    )


def _closure_report(key: CatalogKey) -> CheckReport:
    return closure_check(build_family(key), key.label)


def _jacobi_report(key: CatalogKey) -> CheckReport:
    return jacobi_check(build_family(key))


def _theorem1() -> Iterator[CheckTask]:
    for n in DIMENSIONS:
        yield from _key_tasks("sec2-theorem1", CatalogKey.create(Family.THEOREM1, n=n))


def _determining() -> Iterator[CheckTask]:
    section = "sec2-determining"

    def proof(n: int, solution: ProofSolution) -> Callable[[], CheckReport]:
        def run() -> CheckReport:
            system, determining = extracted_system(n)
            return verify_proof_solution(system, determining, solution)

        return run

    def comparison(reading: Reading) -> Callable[[], CheckReport]:
        def run() -> CheckReport:
            system, determining = extracted_system(2)
            printed = printed_determining_system(system.space, reading)
            return compare_systems(determining, printed, reading=reading.value).as_report()

        return run

    for n in (1, 2):
        yield CheckTask(f"{section}/proof-n={n}", section, proof(n, ProofSolution(n)))
    yield CheckTask(
        f"{section}/mutation-symmetric-C",
        section,
        proof(2, ProofSolution(2, antisymmetric=False)),
        expect_fail=True,
    )
    yield CheckTask(
        f"{section}/mutation-E=B",
        section,
        proof(2, ProofSolution(2, shift_conjugate_phase=False)),
        expect_fail=True,
    )
    yield CheckTask(f"{section}/printed-literal", section, comparison(Reading.LITERAL))
    yield CheckTask(
        f"{section}/printed-summation",
        section,
        comparison(Reading.SUMMATION),
        informational=True,
    )


def _flows() -> Iterator[CheckTask]:
    for name in CHAIN_FLOWS:
        yield _flow_task("sec2-flows", name)


def _potentials() -> Iterator[CheckTask]:
    section = "sec2-potentials"
    space = schrodinger_space(2, label="schrodinger")
    potential = 1 / (space.x[0] ** 2 + space.x[1] ** 2)

    def chain(name: FlowName) -> Callable[[], CheckReport]:
        def run() -> CheckReport:
            return potential_chain(build_flow(name, space), potential).as_report(space)

        return run

    def mapping(name: FlowName) -> Callable[[], CheckReport]:
        def run() -> CheckReport:
            return map_generic_solution(build_flow(name, space))

        return run

    for name in CHAIN_FLOWS:
        yield CheckTask(f"{section}/chain-{name.value}", section, chain(name))
    for name in (FlowName.QB, FlowName.QA, FlowName.DILATION):
        yield CheckTask(f"{section}/solution-{name.value}", section, mapping(name))


def _potential_systems() -> Iterator[CheckTask]:
    for family, section in (
        (Family.LAPLACE, "sec3-laplace"),
        (Family.HEAT, "sec3-heat"),
        (Family.WAVE, "sec3-wave"),
        (Family.HJ, "sec3-hj"),
    ):
        yield from _key_tasks(section, CatalogKey.create(family, n=2))


def _kdv() -> Iterator[CheckTask]:
    section = "sec3-kdv"
    yield from _key_tasks(section, CatalogKey.create(Family.KDV))
    yield from _key_tasks(section, CatalogKey.create(Family.KDV, params={"F": Forcing.CONSTANT}))
    yield from _key_tasks(section, CatalogKey.create(Family.KDV, params={"lambda1": 0}))
    yield _flow_task(section, FlowName.KDV_GALILEI)


def _closure() -> Iterator[CheckTask]:
    section = "sec4-closure"
    keys = [
        CatalogKey.create(Family.SUBALG_EXP, n=2),
        CatalogKey.create(Family.SUBALG_TRIG, n=2),
        *(CatalogKey.create(Family.SUBALG_POLY, n=2, params={"k": k}) for k in (1, 2, 3)),
    ]
    for key in keys:
        yield from _key_tasks(section, key)
        yield CheckTask(
            f"{section}/{key.label}/closure",
            section,
            functools.partial(_closure_report, key),
        )
        yield CheckTask(
            f"{section}/{key.label}/jacobi",
            section,
            functools.partial(_jacobi_report, key),
        )
    yield CheckTask(
        f"{section}/schrodinger-subalgebra",
        section,
        lambda: closure_check(
            schrodinger_subalgebra(schrodinger_space(2)), "schrodinger subalgebra"
        ),
    )


def _theorem2() -> Iterator[CheckTask]:
    section = "sec5-theorem2"
    for n in DIMENSIONS:
        yield from _key_tasks(section, CatalogKey.create(Family.CONVECTION, n=n))
    yield _flow_task(section, FlowName.CONVECTION_GALILEI)


def _euler() -> Iterator[CheckTask]:
    section = "sec5-euler"
    for n in DIMENSIONS:
        for case in range(1, 6):
            yield from _key_tasks(section, CatalogKey.create(Family.EULER, n=n, case=case))
    key = CatalogKey.create(Family.EULER, n=2, case=2)
    yield _flow_task(
        section,
        FlowName.CONVECTION_GALILEI,
        space=key_space(key),
        label=f"convection-galilei[{key.label}]",
    )
    for k in (0, -1):
        yield CheckTask(
            f"{section}/rejects-k={k}",
            section,
            functools.partial(_rejects, Family.EULER, case=2, params={"k": k}),
        )


def _contact() -> Iterator[CheckTask]:
    section = "sec6-contact"
    yield from _key_tasks(section, CatalogKey.create(Family.CONTACT))
    yield _flow_task(section, FlowName.CONTACT_SPECIAL)


def _numeric() -> Iterator[CheckTask]:
    section = "numeric"
    runs = [
        NumericRun(flow=FlowName.GALILEI.value),
        NumericRun(flow=FlowName.PROJECTIVE.value),
        NumericRun(flow=FlowName.QB.value),
        NumericRun(flow=FlowName.DILATION.value),
        NumericRun(flow=FlowName.QA.value, samples="trig"),
        NumericRun(flow=FlowName.GALILEI.value, grid=Grid1D(nt=51, nx=51, mode=Mode.FD)),
        NumericRun(flow=FlowName.PROJECTIVE.value, grid=Grid1D(nt=51, nx=51, mode=Mode.FD)),
    ]
    for run in runs:
        yield CheckTask(
            f"{section}/{run.label}",
            section,
            functools.partial(run_numeric, run),
        )


_SUITES: tuple[Callable[[], Iterator[CheckTask]], ...] = (
    _theorem1,
    _determining,
    _flows,
    _potentials,
    _potential_systems,
    _kdv,
    _closure,
    _theorem2,
    _euler,
    _contact,
    _numeric,
)


def reproduce_tasks(only: str | None = None) -> list[CheckTask]:
    """Every task of the matrix, restricted to sections starting with `only`."""
    tasks = [task for suite in _SUITES for task in suite()]
    if only:
        tasks = [task for task in tasks if task.section.startswith(only)]
        if not tasks:
            raise InvalidCatalogKeyError(
                f"No section starts with {only!r}, expected one of: {', '.join(SECTIONS)}"
            )
    logger.info(f"{len(tasks)} tasks selected")
    return tasks
