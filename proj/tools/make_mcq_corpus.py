#!/usr/bin/env python3
"""Writes the bundled synthetic reading-comprehension corpus (data/mcq_corpus.jsonl).

Every passage is assembled from templated facts, so each question has exactly
one defensible answer. The output is deterministic.
"""
import json
import random
import sys

TOWNS = ["Alderby", "Brookmere", "Calloway", "Dunmore", "Eastwick", "Fernhill",
         "Glenrock", "Harwell", "Ivybridge", "Juniper Falls", "Kestrel Bay",
         "Larkspur", "Millbrook", "Northgate", "Oakhurst", "Pinecrest",
         "Queensford", "Riverton", "Stonebridge", "Thornbury"]
PEOPLE = ["Mira", "Tomas", "Ada", "Kenji", "Lena", "Omar", "Priya", "Jonah",
          "Sofia", "Emeka", "Hana", "Felix", "Rosa", "Ivan", "Nadia", "Leo",
          "Grace", "Yusuf", "Clara", "Mateo"]
EVENTS = ["a lantern festival", "a kite contest", "a bread fair", "a rowing race",
          "a chess tournament", "a flower show", "a music week", "a film night",
          "a science fair", "a poetry evening"]
SEASONS = ["spring", "summer", "autumn", "winter"]
JOBS = ["a baker", "a teacher", "a carpenter", "a nurse", "a gardener",
        "a librarian", "a fisher", "a painter"]
ITEMS = ["bicycles", "boats", "lanterns", "kites", "loaves", "tickets", "chairs", "posters"]
NUMBERS = ["Two", "Three", "Four", "Five", "Six", "Seven", "Eight", "Nine"]
LABELS = "ABCD"


def options_with(correct, pool, rng):
    others = [p for p in pool if p != correct]
    opts = rng.sample(others, 3) + [correct]
    rng.shuffle(opts)
    return opts, LABELS[opts.index(correct)]


def make_record(i, rng):
    town = TOWNS[i]
    person = PEOPLE[i]
    event = rng.choice(EVENTS)
    season = rng.choice(SEASONS)
    job = rng.choice(JOBS)
    item = rng.choice(ITEMS)
    count = rng.randrange(len(NUMBERS))
    helpers = rng.randrange(len(NUMBERS))
    passage = (
        f"Every {season}, the town of {town} holds {event}. This year the event "
        f"was organized by {person}, who works as {job}. "
        f"{person} spent weeks preparing and borrowed {NUMBERS[count].lower()} {item} "
        f"from neighbours. {NUMBERS[helpers]} volunteers helped on the day. "
        f"Visitors said the event brought the whole town together, and {person} "
        f"hopes to organize it again next year."
    )
    questions = []
    opts, label = options_with(season.capitalize() + ".", [s.capitalize() + "." for s in SEASONS], rng)
    questions.append({"stem": f"When is the event in {town} held?", "options": opts, "answer_label": label})
    opts, label = options_with(NUMBERS[count] + ".", [n + "." for n in NUMBERS], rng)
    questions.append({"stem": f"How many {item} did {person} borrow?", "options": opts, "answer_label": label})
    opts, label = options_with(job.capitalize() + ".", [j.capitalize() + "." for j in JOBS], rng)
    questions.append({"stem": f"What does {person} do for work?", "options": opts, "answer_label": label})
    opts, label = options_with(NUMBERS[helpers] + ".", [n + "." for n in NUMBERS], rng)
    questions.append({"stem": "How many volunteers helped on the day?", "options": opts, "answer_label": label})
    return {"passage": passage, "questions": questions}


def main():
    rng = random.Random(1207)
    out = sys.argv[1] if len(sys.argv) > 1 else "data/mcq_corpus.jsonl"
    with open(out, "w", encoding="utf-8") as f:
        for i in range(20):
            f.write(json.dumps(make_record(i, rng), ensure_ascii=False, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
