"""Record golden request/response exchanges from the live play service.

The browser client builds request bodies with JSON.stringify and fixed key
order; this script reproduces those exact bytes (json.dumps with compact
separators and matching insertion order), drives the real FastAPI app, and
stores each exchange so the frontend tests can replay the session against
a fake fetch and assert byte-identical call sequences.

Run from the repository root:
    python3 frontend/scripts/gen_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from orientgame.api import create_app
from orientgame.graph import complete, serialize_graph

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


class Recorder:
    def __init__(self):
        self.client = TestClient(create_app())
        self.exchanges = []

    def post(self, path: str, body: dict) -> dict:
        payload = json.dumps(body, separators=(",", ":"))
        response = self.client.post(
            path, content=payload, headers={"content-type": "application/json"}
        )
        self.exchanges.append(
            {
                "method": "POST",
                "path": path,
                "request_body": payload,
                "status": response.status_code,
                "response": response.json(),
            }
        )
        return response.json()

    def save(self, name: str, **extra):
        doc = {"exchanges": self.exchanges, **extra}
        (FIXTURES / name).write_text(json.dumps(doc, indent=1))
        print(f"wrote {name}: {len(self.exchanges)} exchanges")


def k3_path_session():
    rec = Recorder()
    graph = serialize_graph(complete(3))
    created = rec.post(
        "/sessions", {"graph": graph, "role": "algy", "opponent": "order:0,1,2"}
    )
    sid = created["id"]
    rec.post(f"/sessions/{sid}/query", {"edge": [0, 1]})
    last = rec.post(f"/sessions/{sid}/query", {"edge": [1, 2]})
    assert last["view"]["terminal"] and last["view"]["total"] == 2
    rec.save("golden_k3_path.json", server_total=last["view"]["total"])


def k3_adversary_session():
    rec = Recorder()
    graph = serialize_graph(complete(3))
    created = rec.post(
        "/sessions", {"graph": graph, "role": "algy", "opponent": "greedy"}
    )
    sid = created["id"]
    rec.post(f"/sessions/{sid}/query", {"edge": [0, 1]})
    rec.post(f"/sessions/{sid}/query", {"edge": [1, 2]})
    last = rec.post(f"/sessions/{sid}/query", {"edge": [0, 2]})
    assert last["view"]["terminal"] and last["view"]["total"] == 3
    rec.save("golden_k3_adversary.json", server_total=last["view"]["total"])


def k4_forced_pending_session():
    # strategist mode against the one questioner that still queries forced
    # edges; after 0->1, 2->0, 0->3 the pending edge {1,2} is forced (2,1)
    rec = Recorder()
    graph = serialize_graph(complete(4))
    created = rec.post(
        "/sessions",
        {"graph": graph, "role": "strategist", "opponent": "tworound:p=1:seed=0"},
    )
    sid = created["id"]
    assert created["view"]["pending"] == [0, 1]
    rec.post(f"/sessions/{sid}/answer", {"dir": [0, 1]})
    rec.post(f"/sessions/{sid}/answer", {"dir": [2, 0]})
    step = rec.post(f"/sessions/{sid}/answer", {"dir": [0, 3]})
    assert step["next_query"] == [1, 2]
    statuses = {tuple(e["e"]): e for e in step["view"]["edges"]}
    assert statuses[(1, 2)]["status"] == "forced"
    assert statuses[(1, 2)]["dir"] == [2, 1]
    rejected = rec.post(f"/sessions/{sid}/answer", {"dir": [1, 2]})
    assert rec.exchanges[-1]["status"] == 409
    assert rejected["detail"]["forced"] == [2, 1]
    rec.post(f"/sessions/{sid}/answer", {"dir": [2, 1]})
    last = rec.post(f"/sessions/{sid}/answer", {"dir": [1, 3]})
    # answering {1,3} forces the final edge {2,3}: game over at five moves
    assert last["next_query"] is None
    assert last["view"]["terminal"] and last["view"]["total"] == 5
    rec.save("legality_k4_forced.json", server_total=last["view"]["total"])


if __name__ == "__main__":
    FIXTURES.mkdir(parents=True, exist_ok=True)
    k3_path_session()
    k3_adversary_session()
    k4_forced_pending_session()
