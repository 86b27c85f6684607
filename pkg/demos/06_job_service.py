"""Drive the HTTP job service end to end: upload, run, poll, fetch.

Uses the in-process test client, so no server needs to be running.
(The real deployment is ``python -m dualnet.service``.)
"""

import tempfile
import time
from pathlib import Path

from fastapi.testclient import TestClient

from dualnet.service import create_app

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

app = create_app(data_dir=tempfile.mkdtemp(prefix="dualnet-demo-"))
client = TestClient(app)

datasets = {}
for role, filename in (
    ("physical", "physical.el"),
    ("conceptual", "conceptual.el"),
    ("groundtruth", None),
):
    payload = (
        "a1 a2 a3 a4\nb1 b2 b3 b4\n"
        if filename is None
        else (TOY / filename).read_text()
    )
    response = client.post(
        "/datasets", data={"role": role}, files={"file": ("data.txt", payload)}
    )
    datasets[role] = response.json()["dataset_id"]
    print(f"uploaded {role}: {datasets[role][:12]}… ({response.json()['bytes']} bytes)")

response = client.post(
    "/jobs",
    json={
        "kind": "communities",
        "physical": datasets["physical"],
        "conceptual": datasets["conceptual"],
        "groundtruth": datasets["groundtruth"],
        "params": {"delta": 2, "k": 4, "seed": 0},
    },
)
job_id = response.json()["job_id"]
print(f"\ncreated job {job_id} -> {response.status_code}")

while True:
    record = client.get(f"/jobs/{job_id}").json()
    print("  state:", record["state"])
    if record["state"] in ("done", "failed"):
        break
    time.sleep(0.05)

print("\ntimings:", record["timings"])
doc = client.get(f"/jobs/{job_id}/result").json()
print(f"result: {len(doc['communities'])} communities, layout seed {doc['layout_seed']}")
for community in doc["communities"]:
    print(f"  #{community['rank']} score={community['score']:.4f} "
          f"physical={community['physical_nodes']}")
print("evaluation vs ground truth:", doc["evaluation"])
