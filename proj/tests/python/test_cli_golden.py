# Copyright 2026 The jmorph authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

CLI = os.environ["JMORPH_CLI"]
DATA = os.environ["JMORPH_DATA"]

ANALYZE_INPUT = (
    "N#お/30 医者/38 様/55$\n"
    "V#言った$\n"
    "V#信じられている|信じる$\n"
    "A#好きです|好き$\n"
    "A#悪くない$\n"
    "V#食べている$\n"
).encode()

ANALYZE_GOLDEN = (
    "医者\tformal animate polite\n"
    "言った\t言う\tv\tpfv\n"
    "信じられている\t信じる\tv\tpasv te prog\n"
    "信じられている\t信じる\tv\tpot te prog\n"
    "好きです\t好き\tadj\tpol\n"
    "悪くない\t悪い\tadj\tneg\n"
    "食べている\t食べる\tv\tte prog\n"
).encode()


def run(args, stdin=b""):
    return subprocess.run(
        [CLI, "--lexicon", os.path.join(DATA, "lexicon.tsv")] + args,
        input=stdin,
        capture_output=True,
    )


def test_analyze_matches_golden_and_is_deterministic():
    first = run(["analyze"], ANALYZE_INPUT)
    second = run(["analyze"], ANALYZE_INPUT)
    assert first.returncode == 0, first.stderr
    assert first.stdout == ANALYZE_GOLDEN
    assert first.stdout == second.stdout


def test_generate_lists_contractions():
    out = run(["generate", "食べる", "te", "prog"])
    assert out.returncode == 0
    assert out.stdout == "食べている\n食べてる\n".encode()


def test_generate_unknown_lemma_exits_2():
    out = run(["generate", "ほげる", "te"])
    assert out.returncode == 2
    assert out.stderr


def test_bad_line_reports_but_does_not_abort_stream():
    out = run(["analyze"], "V#oops\nV#言った$\n".encode())
    assert out.returncode == 1
    assert "line 1" in out.stderr.decode()
    assert "言った\t言う\tv\tpfv\n".encode() in out.stdout


def test_unanalyzable_surface_prints_placeholders():
    out = run(["analyze"], "V#ほげほげげ$\n".encode())
    assert out.returncode == 0
    assert out.stdout == "ほげほげげ\t?\t?\t?\n".encode()


def test_evaluate_jsonl_summary():
    out = run(["evaluate", os.path.join(DATA, "gold", "verbs.tsv"), "--jsonl"])
    again = run(["evaluate", os.path.join(DATA, "gold", "verbs.tsv"), "--jsonl"])
    assert out.returncode == 0
    assert out.stdout == again.stdout
    lines = out.stdout.decode().splitlines()
    summary = json.loads(lines[-1])
    assert summary["items"] == 7
    assert summary["recall"] == 1.0
    assert 0.9 < summary["precision"] < 1.0
    assert len(lines) == summary["items"] + 1


def test_evaluate_text_report():
    out = run(["evaluate", os.path.join(DATA, "gold", "adjectives.tsv")])
    assert out.returncode == 0
    text = out.stdout.decode()
    assert text.endswith("items 5  precision 1.0000  recall 1.0000\n")
    assert text.startswith("surface")
