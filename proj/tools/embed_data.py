#!/usr/bin/env python3
"""Regenerates include/critlab/data/*.hpp from the files under data/."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "include" / "critlab" / "data"

HEADER = """// Generated by tools/embed_data.py from {src}. Do not edit.
#pragma once

#include <string_view>

namespace critlab::data {{

inline constexpr std::string_view {name} = R"critlab({body})critlab";

}}  // namespace critlab::data
"""


def emit(src, name, dst):
    body = (ROOT / src).read_text(encoding="utf-8")
    (OUT / dst).write_text(HEADER.format(src=src, name=name, body=body), encoding="utf-8")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    emit("data/words.txt", "kWordList", "word_list.hpp")
    emit("data/mcq_corpus.jsonl", "kMcqCorpus", "mcq_corpus.hpp")
