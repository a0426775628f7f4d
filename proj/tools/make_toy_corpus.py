#!/usr/bin/env python3
# Copyright 2026 The edit-lens Authors.
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

"""Writes the bundled toy corpus: 4 systems x 50 segments with annotated
post-edits, source alignments and 5 documents.

The output is a pure function of --seed, so regenerating never changes the
committed files unless the generator itself changes.
"""

import argparse
import json
import random
from pathlib import Path

# lemma, pos, dependency label, inflected forms, source word
LEXICON = [
    ("Haus", "N", "obj", ["Haus", "Hauses", "Häuser"], "house"),
    ("Frau", "N", "subj", ["Frau", "Frauen"], "woman"),
    ("Kind", "N", "obj", ["Kind", "Kinder", "Kindes"], "child"),
    ("Idee", "N", "obj", ["Idee", "Ideen"], "idea"),
    ("Welt", "N", "pn", ["Welt", "Welten"], "world"),
    ("Stadt", "N", "pn", ["Stadt", "Städte"], "city"),
    ("sehen", "V", "root", ["sehen", "sieht", "sah", "gesehen"], "see"),
    ("machen", "V", "root", ["machen", "macht", "machte", "gemacht"], "make"),
    ("sagen", "V", "root", ["sagen", "sagt", "sagte", "gesagt"], "say"),
    ("haben", "V", "aux", ["haben", "hat", "hatte"], "have"),
    ("werden", "V", "aux", ["werden", "wird", "wurde", "wurden"], "will"),
    ("können", "V", "aux", ["können", "kann", "konnte"], "can"),
    ("ich", "PRO", "subj", ["ich"], "I"),
    ("sie", "PRO", "subj", ["sie"], "she"),
    ("wir", "PRO", "subj", ["wir"], "we"),
    ("es", "PRO", "obja", ["es"], "it"),
    ("der", "ART", "det", ["der", "die", "das", "den", "dem"], "the"),
    ("ein", "ART", "det", ["ein", "eine", "einen", "einem"], "a"),
    ("groß", "ADJ", "attr", ["groß", "große", "großen", "großes"], "big"),
    ("neu", "ADJ", "attr", ["neu", "neue", "neuen"], "new"),
    ("heute", "ADV", "adv", ["heute"], "today"),
    ("nicht", "PTKNEG", "adv", ["nicht"], "not"),
    ("wirklich", "ADV", "adv", ["wirklich"], "really"),
    ("in", "APPR", "pp", ["in", "im"], "in"),
    ("mit", "APPR", "pp", ["mit"], "with"),
    ("und", "KON", "kon", ["und"], "and"),
]

PUNCT = ("$.", "root")
COMMA = ("$,", "punct")

SYSTEMS = {
    # name: (inflection, lexical, verb shift, other shift, drop, insert) rates
    "pbsy": (0.10, 0.08, 0.35, 0.15, 0.04, 0.04),
    "hpb": (0.11, 0.09, 0.40, 0.18, 0.04, 0.05),
    "spb": (0.11, 0.08, 0.38, 0.17, 0.05, 0.04),
    "nmt": (0.08, 0.07, 0.10, 0.06, 0.03, 0.03),
}


def make_postedit(rng):
    """One post-edit sentence as a list of token dicts."""
    n = rng.randint(26, 48) if rng.random() < 0.2 else rng.randint(4, 22)
    tokens = []
    for i in range(n):
        lemma, pos, dep, forms, src = rng.choice(LEXICON)
        tokens.append({"form": rng.choice(forms), "lemma": lemma, "pos": pos,
                       "dep": dep, "src": src})
        if i not in (0, n - 1) and rng.random() < 0.06:
            tokens.append({"form": ",", "lemma": ",", "pos": COMMA[0], "dep": COMMA[1],
                           "src": ","})
    tokens.append({"form": ".", "lemma": ".", "pos": PUNCT[0], "dep": "punct", "src": "."})
    return tokens


def make_source(rng, postedit):
    """Source tokens plus the source->post-edit alignment (source order is a
    local permutation of the post-edit order)."""
    order = list(range(len(postedit) - 1))
    for i in range(len(order) - 1):
        if rng.random() < 0.2:
            order[i], order[i + 1] = order[i + 1], order[i]
    order.append(len(postedit) - 1)
    source = [postedit[p]["src"] for p in order]
    links = [(s, p) for s, p in enumerate(order)]
    return source, links


def corrupt(rng, postedit, rates):
    """MT output derived from the post-edit. Each output token remembers the
    post-edit position it came from (None for insertions)."""
    infl, lex, verb_shift, other_shift, drop, insert = rates
    out = []
    for p, tok in enumerate(postedit):
        if tok["pos"].startswith("$"):
            out.append(dict(tok, origin=p))
            continue
        if rng.random() < drop:
            continue
        t = dict(tok, origin=p)
        entry = next(e for e in LEXICON if e[0] == tok["lemma"])
        r = rng.random()
        if r < infl and len(entry[3]) > 1:
            t["form"] = rng.choice([f for f in entry[3] if f != tok["form"]])
        elif r < infl + lex:
            lemma, pos, dep, forms, _ = rng.choice(LEXICON)
            t.update(form=rng.choice(forms), lemma=lemma, pos=pos, dep=dep, lexical=True)
        out.append(t)
        if rng.random() < insert:
            lemma, pos, dep, forms, _ = rng.choice(LEXICON)
            out.append({"form": rng.choice(forms), "lemma": lemma, "pos": pos, "dep": dep,
                        "origin": None})
    body, final = out[:-1], out[-1:]
    for i in range(len(body)):
        rate = verb_shift if body[i]["pos"] == "V" else other_shift
        if rng.random() < rate / 3 and len(body) > 3:
            tok = body.pop(i)
            j = min(len(body), max(0, i + rng.choice([-4, -3, -2, 2, 3, 4, 6])))
            body.insert(j, tok)
    return body + final


def reference_from(rng, postedit):
    """An independent translation: the post-edit with some lexical drift."""
    out = []
    for tok in postedit:
        if not tok["pos"].startswith("$") and rng.random() < 0.25:
            forms = rng.choice(LEXICON)[3]
            out.append(rng.choice(forms))
        else:
            out.append(tok["form"])
    if len(out) > 4 and rng.random() < 0.5:
        i = rng.randrange(len(out) - 2)
        out[i], out[i + 1] = out[i + 1], out[i]
    return out


def conllu(sentences):
    lines = []
    for k, sent in enumerate(sentences):
        lines.append(f"# sent_id = {k + 1}")
        for i, tok in enumerate(sent):
            head = 0 if tok["dep"] == "root" else 1
            lines.append("\t".join([str(i + 1), tok["form"], tok["lemma"], tok["pos"], "_", "_",
                                    str(head), tok["dep"], "_", "_"]))
        lines.append("")
    return "\n".join(lines) + "\n"


def plain(sentences):
    return "".join(" ".join(s) + "\n" for s in sentences)


def pharaoh(link_sets):
    return "".join(" ".join(f"{s}-{t}" for s, t in links) + "\n" for links in link_sets)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "toy"))
    parser.add_argument("--seed", type=int, default=2016)
    parser.add_argument("--segments", type=int, default=50)
    parser.add_argument("--docs", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    postedits, sources, src_pe_links = [], [], []
    for _ in range(args.segments):
        pe = make_postedit(rng)
        src, links = make_source(rng, pe)
        postedits.append(pe)
        sources.append(src)
        src_pe_links.append(links)

    (out / "source.en.txt").write_text(plain(sources), encoding="utf-8")
    (out / "reference.de.txt").write_text(
        plain([reference_from(rng, pe) for pe in postedits]), encoding="utf-8")
    (out / "extra_ref.de.txt").write_text(
        plain([reference_from(rng, pe) for pe in postedits]), encoding="utf-8")

    systems = []
    for name, rates in SYSTEMS.items():
        outputs, own_pe, src_mt, src_own_pe = [], [], [], []
        for k, pe in enumerate(postedits):
            mt = corrupt(rng, pe, rates)
            # Post-editors accept some lexical choices of the system, so each
            # targeted post-edit drifts slightly from the shared one.
            mine = [dict(t) for t in pe]
            for t in mt:
                if t.get("lexical") and rng.random() < 0.4:
                    mine[t["origin"]].update(form=t["form"], lemma=t["lemma"], pos=t["pos"],
                                             dep=t["dep"])
            # Over-editing: rewordings the output did not call for.
            for t in mine:
                if not t["pos"].startswith("$") and rng.random() < 0.08:
                    lemma, pos, dep, forms, _ = rng.choice(LEXICON)
                    t.update(form=rng.choice(forms), lemma=lemma, pos=pos, dep=dep)
            outputs.append(mt)
            own_pe.append(mine)
            pe_to_src = {p: s for s, p in src_pe_links[k]}
            src_mt.append(sorted((pe_to_src[t["origin"]], j) for j, t in enumerate(mt)
                                 if t["origin"] is not None))
            src_own_pe.append(sorted(src_pe_links[k]))
        (out / f"{name}.mt.conllu").write_text(conllu(outputs), encoding="utf-8")
        (out / f"{name}.pe.conllu").write_text(conllu(own_pe), encoding="utf-8")
        (out / f"{name}.src-mt.align").write_text(pharaoh(src_mt), encoding="utf-8")
        (out / f"{name}.src-pe.align").write_text(pharaoh(src_own_pe), encoding="utf-8")
        systems.append({
            "name": name,
            "output": f"{name}.mt.conllu",
            "postedit": f"{name}.pe.conllu",
            "align_source_output": f"{name}.src-mt.align",
            "align_source_postedit": f"{name}.src-pe.align",
        })

    per_doc = args.segments // args.docs
    docs = []
    for d in range(args.docs):
        last = args.segments - 1 if d == args.docs - 1 else (d + 1) * per_doc - 1
        docs.append({"id": f"talk{d + 1:02d}", "first": d * per_doc, "last": last})

    manifest = {
        "source": "source.en.txt",
        "reference": "reference.de.txt",
        "systems": systems,
        "additional_references": ["extra_ref.de.txt"],
        "docs": docs,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
