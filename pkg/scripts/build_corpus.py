#!/usr/bin/env python3
"""Regenerate the bundled example corpus under corpus/.

Encodes the sentence-20 annotations for the four interpreting outputs (the
senior interpreter and three junior interpreters), minimal sentence-12 and
sentence-42 documents for the repetition-normalization and keyword-penalty
behaviors, and the three-system score/BLEU report fixtures with their human
judgments used by the correlation command.
"""

from __future__ import annotations

import json
from pathlib import Path

from framescore import (
    make_document,
    make_fe,
    make_frame,
    make_sentence,
    serialize_document,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

SS20_TEXT = ("No single person can train all the math and science teachers we'll need "
             "to equip our children for the future, or build the roads and networks and "
             "research labs that will bring new jobs and businesses to our shores.")

SS20_FRAMES = [
    make_frame("Needing", "need", [
        make_fe("Requirement", "all the math and science teachers"),
        make_fe("Cognizer", "we"),
        make_fe("Dependent", "to equip our children for the future"),
    ]),
    make_frame("Capability", "can", [
        make_fe("Entity", "No single person"),
        make_fe("Event", "train all the math and science teachers"),
    ]),
    make_frame("Education_teaching", "train", [
        make_fe("Fact", "all the math and science teachers"),
    ]),
    make_frame("Supply", "equip", [
        make_fe("Recipient", "our children"),
        make_fe("Purpose_of_recipient", "for the future"),
    ]),
    make_frame("Building", "build", [
        make_fe("Created_entity", "the roads"),
        make_fe("Created_entity", "networks"),
        make_fe("Created_entity", "research labs"),
    ]),
    make_frame("Bringing", "bring", [
        make_fe("Agent", "that"),
        make_fe("Theme", "new jobs"),
        make_fe("Theme", "businesses"),
        make_fe("Goal", "to our shores"),
    ]),
]

SI20_TEXT = ("没有任何一个人有能力训练出我们后代的教育需要的所有数学和科学教师，"
             "或者建造出能把新的工作和商业机会带给我们的道路、网络、实验室。")

SI20_FRAMES = [
    make_frame("Capability", "有能力", [
        make_fe("Entity", "没有任何一个人"),
        make_fe("Event", "训练出我们后代的教育需要的所有数学和科学教师"),
        make_fe("Event", "建造出能把新的工作和商业机会带给我们的道路、网络、实验室"),
    ]),
    make_frame("Existence", "没有", [
        make_fe("Entity", "任何一个人"),
    ]),
    make_frame("Education_teaching", "训练出", [
        make_fe("Fact", "我们后代的教育需要的所有数学和科学教师"),
    ]),
    make_frame("Needing", "需要", [
        make_fe("Cognizer", "我们后代的教育"),
    ]),
    make_frame("Building", "建造出", [
        make_fe("Created_entity", "道路"),
        make_fe("Created_entity", "网络"),
        make_fe("Created_entity", "实验室"),
    ]),
    make_frame("Bringing", "带给", [
        make_fe("Theme", "新的工作"),
        make_fe("Theme", "商业机会"),
        make_fe("Goal", "我们"),
    ]),
]

JI01_TEXT = ("没有一个单独的人可以培训美国的科学家，可以保护美国孩子们的未来，"
             "不可能把我们的工作保护在我们的国土内。")

JI01_FRAMES = [
    make_frame("Capability", "可以", [
        make_fe("Entity", "没有一个单独的人"),
        make_fe("Event", "培训美国的科学家"),
        make_fe("Event", "保护美国孩子们的未来"),
        make_fe("Event", "把我们的工作保护在我们的国土内"),
    ]),
    make_frame("Existence", "没有", [
        make_fe("Entity", "一个单独的人"),
    ]),
    make_frame("Education_teaching", "培训", [
        make_fe("Student", "美国的科学家"),
    ]),
    make_frame("Protecting", "保护", [
        make_fe("Asset", "美国孩子们的未来"),
    ]),
    make_frame("Protecting", "保护", [
        make_fe("Asset", "我们的工作"),
        make_fe("Place", "在我们的国土内"),
    ]),
]

JI02_TEXT = ("没有一个单独的人能够训练所有的数学和科学家。"
             "我们需要为将来装备我们的孩子和实验室，这将带来新的工作和商业。")

JI02_FRAMES = [
    make_frame("Capability", "能够", [
        make_fe("Entity", "没有一个单独的人"),
        make_fe("Event", "训练所有的数学和科学家"),
    ]),
    make_frame("Existence", "没有", [
        make_fe("Entity", "一个单独的人"),
    ]),
    make_frame("Education_teaching", "训练", [
        make_fe("Student", "所有的数学和科学家"),
    ]),
    make_frame("Needing", "需要", [
        make_fe("Cognizer", "我们"),
        make_fe("Dependent", "为将来装备我们的孩子和实验室"),
    ]),
    # Role spelled with a capital R in the original annotation list; the
    # normalizer treats it as Purpose_of_recipient.
    make_frame("Supply", "装备", [
        make_fe("Purpose_of_Recipient", "为将来"),
        make_fe("Recipient", "我们的孩子和实验室"),
    ]),
    make_frame("Bringing", "将带来", [
        make_fe("Agent", "这"),
        make_fe("Theme", "新的工作和商业"),
    ]),
]

JI03_TEXT = ("没有一个人能够训练科学家。我们需要增强孩子，修建实验室，"
             "这将给我们的海岸带来新的工作机会。")

JI03_FRAMES = [
    make_frame("Capability", "能够", [
        make_fe("Entity", "没有一个人"),
        make_fe("Event", "训练科学家"),
    ]),
    make_frame("Existence", "没有", [
        make_fe("Entity", "一个人"),
    ]),
    make_frame("Education_teaching", "训练", [
        make_fe("Student", "科学家"),
    ]),
    make_frame("Needing", "需要", [
        make_fe("Cognizer", "我们"),
        make_fe("Dependent", "增强孩子"),
        make_fe("Dependent", "修建实验室"),
    ]),
    # Label variants as they appear in the original annotation list; the
    # default alias table maps them to cause_change_of_strength and
    # created_entity.
    make_frame("Cause_of_strength", "增强", [
        make_fe("Patient", "孩子"),
    ]),
    make_frame("Building", "修建", [
        make_fe("Create_entity", "实验室"),
    ]),
    make_frame("Bringing", "带来", [
        make_fe("Agent", "这"),
        make_fe("Goal", "我们的海岸"),
        make_fe("Theme", "新的工作机会"),
    ]),
]

# Sentence 12, minimal: the matched Needing frame has 5 FEs on each side,
# with Dependent twice in the source but three times in the interpretation.
# The target frame name carries the "Neding" spelling the alias table fixes.
S12_SOURCE_TEXT = "We need a growing economy that creates good jobs and new industries now."
S12_TARGET_TEXT = "我们需要持续增长的经济，需要好的工作、新的产业、新的机会。"

S12_SOURCE_FRAMES = [
    make_frame("Needing", "need", [
        make_fe("Cognizer", "We"),
        make_fe("Requirement", "a growing economy"),
        make_fe("Dependent", "good jobs"),
        make_fe("Dependent", "new industries"),
        make_fe("Time", "now"),
    ]),
]

S12_TARGET_FRAMES = [
    make_frame("Neding", "需要", [
        make_fe("Cognizer", "我们"),
        make_fe("Requirement", "持续增长的经济"),
        make_fe("Dependent", "好的工作"),
        make_fe("Dependent", "新的产业"),
        make_fe("Dependent", "新的机会"),
    ]),
]

# Sentence 42, minimal: the matched Commitment frames share the FE Manner,
# but the target filler generalizes away the program names, which are
# keywords; the bundled overlay flags that occurrence as mistranslated.
S42_SOURCE_TEXT = ("The commitments we make to each other through Medicare and Medicaid "
                   "and Social Security, these things do not sap our initiative, they "
                   "strengthen us.")
S42_TARGET_TEXT = "我们彼此通过一些体系做出的承诺，不会削弱我们的积极性，反而让我们更强大。"

S42_SOURCE_FRAMES = [
    make_frame("Commitment", "commitments", [
        make_fe("Speaker", "we"),
        make_fe("Manner", "Medicare and Medicaid and Social Security", keywords=[
            ("terminology", "Medicare"),
            ("terminology", "Medicaid"),
            ("terminology", "Social Security"),
        ]),
    ]),
]

S42_TARGET_FRAMES = [
    make_frame("Commitment", "承诺", [
        make_fe("Speaker", "我们"),
        make_fe("Manner", "一些体系"),
    ]),
]

S42_OVERLAY = {
    "doc_id": "obama2012-s42-si",
    "sentence_overlays": [
        {
            "sentence_id": 42,
            "frame_pair_overrides": [],
            "keyword_flags": [
                {"side": "target", "frame": 0, "role": "Manner",
                 "occurrence": 0, "category": "terminology"},
            ],
        },
    ],
}

# Score and BLEU report fixtures for the three-system correlation example
# (reference translation, senior interpreter, machine translation), with the
# human judge's 0-100 scores.
TABLE5_SYSTEMS = {
    "Reference": {"f_mine": 0.85, "f_maxe": 0.80, "bleu": 1.00, "human": 90},
    "SI": {"f_mine": 0.83, "f_maxe": 0.74, "bleu": 0.13, "human": 80},
    "MT": {"f_mine": 0.77, "f_maxe": 0.59, "bleu": 0.14, "human": 60},
}


def write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {path}")


def dump_json(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def main() -> None:
    systems = {
        "si": ("SI", SI20_TEXT, SI20_FRAMES),
        "ji01": ("JI01", JI01_TEXT, JI01_FRAMES),
        "ji02": ("JI02", JI02_TEXT, JI02_FRAMES),
        "ji03": ("JI03", JI03_TEXT, JI03_FRAMES),
    }
    for slug, (system_id, target_text, target_frames) in systems.items():
        doc = make_document(
            doc_id=f"obama2012-s20-{slug}",
            system_id=system_id,
            sentences=[make_sentence(20, SS20_TEXT, target_text, SS20_FRAMES, target_frames)],
        )
        write(CORPUS / f"sentence20_{slug}.json", serialize_document(doc))

    s12 = make_document(
        doc_id="obama2012-s12-si", system_id="SI",
        sentences=[make_sentence(12, S12_SOURCE_TEXT, S12_TARGET_TEXT,
                                 S12_SOURCE_FRAMES, S12_TARGET_FRAMES)],
    )
    write(CORPUS / "sentence12_si.json", serialize_document(s12))

    s42 = make_document(
        doc_id="obama2012-s42-si", system_id="SI",
        sentences=[make_sentence(42, S42_SOURCE_TEXT, S42_TARGET_TEXT,
                                 S42_SOURCE_FRAMES, S42_TARGET_FRAMES)],
    )
    write(CORPUS / "sentence42_si.json", serialize_document(s42))
    write(CORPUS / "sentence42_si.overlay.json", dump_json(S42_OVERLAY))

    table5 = CORPUS / "table5"
    human_lines = ["sentence_id,system_id,score"]
    for system_id, values in TABLE5_SYSTEMS.items():
        slug = system_id.lower()
        write(table5 / f"scores_{slug}.json", dump_json({
            "doc_id": f"obama2012-s20-{slug}",
            "system_id": system_id,
            "per_sentence": {"20": {"f_mine": values["f_mine"], "f_maxe": values["f_maxe"]}},
            "avg_f_mine": values["f_mine"],
            "avg_f_maxe": values["f_maxe"],
        }))
        write(table5 / f"bleu_{slug}.json", dump_json({
            "doc_id": f"obama2012-s20-{slug}",
            "system_id": system_id,
            "per_sentence": {"20": {"bleu": values["bleu"]}},
            "avg_bleu": values["bleu"],
        }))
        human_lines.append(f"20,{system_id},{values['human']}")
    write(table5 / "human_scores.csv", "\n".join(human_lines) + "\n")


if __name__ == "__main__":
    main()
