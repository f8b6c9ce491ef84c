from __future__ import annotations

import logging
from typing import Any, Dict, List, Sequence

from langgraph.graph import END, StateGraph

from orbitope.schemas import SuiteName
from orbitope.state import SuiteReport, VerifyState
from orbitope.suites import run_suite

logger = logging.getLogger(__name__)


def route_initial_entry(state: VerifyState) -> str:
    """Entry router: nothing requested means straight to Finalize."""
    if not state.get("suites"):
        logger.info("Conditional Entry: no suites requested. Routing to Finalize.")
        return "Finalize"
    return "RunSuite"


def run_suite_node(state: VerifyState) -> Dict[str, Any]:
    cursor = state["cursor"]
    name = state["suites"][cursor]
    report = run_suite(name, state["max_n"], state["guard_n"])
    return {
        "results": state.get("results", []) + [report],
        "cursor": cursor + 1,
        "active_node": "RunSuite",
    }


def route_next_suite(state: VerifyState) -> str:
    """Loop over pending suites, then seal the verdict."""
    if state["cursor"] < len(state["suites"]):
        return "RunSuite"
    return "Finalize"


def finalize_node(state: VerifyState) -> Dict[str, Any]:
    results = state.get("results", [])
    passed = all(report.all_passed for report in results)
    logger.info("--- Verification finished: %s ---", "all pass" if passed else "FAILURES")
    return {"passed": passed, "active_node": "Finalize"}


def compile_verify_graph():
    """Compiles the verification workflow: RunSuite loops until Finalize."""
    workflow = StateGraph(VerifyState)

    workflow.add_node("RunSuite", run_suite_node)
    workflow.add_node("Finalize", finalize_node)

    workflow.set_conditional_entry_point(
        route_initial_entry,
        {
            "RunSuite": "RunSuite",
            "Finalize": "Finalize",
        },
    )

    workflow.add_conditional_edges(
        "RunSuite",
        route_next_suite,
        {
            "RunSuite": "RunSuite",
            "Finalize": "Finalize",
        },
    )

    workflow.add_edge("Finalize", END)

    return workflow.compile()


verify_graph = compile_verify_graph()


def run_verification(
    suites: Sequence[SuiteName], max_n: int, guard_n: int
) -> List[SuiteReport]:
    initial_state: VerifyState = {
        "suites": list(suites),
        "max_n": max_n,
        "guard_n": guard_n,
        "cursor": 0,
        "results": [],
        "active_node": "Entry",
        "passed": None,
    }
    final_state = verify_graph.invoke(
        initial_state, config={"recursion_limit": 4 * len(suites) + 10}
    )
    return final_state["results"]
