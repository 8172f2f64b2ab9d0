#!/usr/bin/env python3
"""Regenerate the bundled Arabic test corpus deterministically.

Run from this directory:  python3 gen_fixture.py

Everything is derived from a fixed seed, so the output is byte-stable and the
files can be committed.  The corpus is a small synthetic news collection:
ten topic directories with ten documents each, a query file, graded relevance
judgments, a synonym thesaurus (including a deliberately polysemous entry:
the calorie sense joins the price synset), and a stopword list.
"""

import os
import random

random.seed(20260819)

HERE = os.path.dirname(os.path.abspath(__file__))

FATHA = "َ"
KASRA = "ِ"
SHADDA = "ّ"

STOPWORDS = ["في", "من", "على", "ان", "الى", "عن", "او", "هذا", "التي", "كان", "هو", "ما"]

# general words that cross topic boundaries
SHARED = ["سعر", "اسعار", "سوق", "يوم", "عام", "تقرير"]

TOPICS = {
    "oil": ["نفط", "برميل", "اوبك", "خام", "انتاج", "تصدير", "طاقة", "حقل"],
    "economy": ["اقتصاد", "نمو", "تضخم", "ناتج", "استثمار", "مال", "تكلفة", "ثمن"],
    "food": ["غذاء", "سعرة", "حرارية", "حمية", "طعام", "وجبة", "صحة"],
    "health": ["مستشفى", "طبيب", "علاج", "دواء", "مريض", "عيادة"],
    "sport": ["رياضة", "كرة", "قدم", "مباراة", "فريق", "هدف", "بطولة"],
    "weather": ["طقس", "مطر", "حرارة", "رياح", "عاصفة", "غيوم"],
    "tech": ["تقنية", "حاسوب", "برمجية", "شبكة", "بيانات", "ذكاء"],
    "travel": ["سفر", "طائرة", "مطار", "رحلة", "فندق", "سياحة"],
    "agriculture": ["زراعة", "قمح", "محصول", "ري", "مزارع", "حصاد"],
    "culture": ["ثقافة", "كتاب", "شعر", "فن", "متحف", "تراث"],
}

# topics whose documents also talk about prices
PRICED = {"oil", "economy", "food"}


def decorate(word):
    """Apply harmless surface variation that normalization folds away."""
    if word.startswith("ا") and random.random() < 0.3:
        word = random.choice(["أ", "إ"]) + word[1:]
    if random.random() < 0.15:
        pos = random.randrange(1, len(word))
        word = word[:pos] + random.choice([FATHA, KASRA, SHADDA]) + word[pos:]
    return word


def pick_token(topic):
    r = random.random()
    if r < 0.62:
        word = random.choice(TOPICS[topic])
    elif r < 0.82:
        word = random.choice(STOPWORDS)
    elif topic in PRICED:
        word = random.choice(SHARED)
    else:
        word = random.choice(SHARED[2:])  # non-price general words
    return word


def make_doc(topic):
    lines = []
    for _ in range(random.randint(3, 6)):
        tokens = []
        for _ in range(random.randint(6, 12)):
            if topic == "oil" and random.random() < 0.06:
                tokens.extend(["ذهب", "اسود"])  # the black-gold bigram
                continue
            tokens.append(decorate(pick_token(topic)))
        sent = []
        for i, tok in enumerate(tokens):
            sent.append(tok)
            if i + 1 < len(tokens) and random.random() < 0.1:
                sent[-1] += "،"
        lines.append(" ".join(sent) + random.choice(["." , ".", "؟"]))
    return "\n".join(lines) + "\n"


def write(path, content):
    full = os.path.join(HERE, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)


def main():
    # --- corpus ---------------------------------------------------------
    for topic in TOPICS:
        for n in range(1, 11):
            write(os.path.join("corpus", topic, "d%02d.txt" % n), make_doc(topic))
    write(
        os.path.join("corpus", "notes.md"),
        "Only .txt files below this directory are indexed; this file is ignored.\n",
    )

    # --- stopwords ------------------------------------------------------
    write(
        "stopwords.txt",
        "# function words removed during analysis\n" + "\n".join(STOPWORDS) + "\n",
    )

    # --- thesaurus ------------------------------------------------------
    write(
        "thesaurus.tsv",
        "# synset id <TAB> pos <TAB> comma-separated members\n"
        "s01\tnoun\tسعر,تكلفة,ثمن,سعرة\n"  # calorie deliberately joins price
        "s02\tnoun\tنفط,خام,ذهب اسود\n"
        "s03\tnoun\tغذاء,طعام,وجبة\n"
        "s04\tnoun\tاقتصاد,مال\n"
        "s05\tnoun\tمستشفى,مشفى\n"
        "s06\tverb\tسافر,ارتحل\n",
    )

    # --- queries --------------------------------------------------------
    queries = [
        ("q01", "اسعار نفط", "oil"),
        ("q02", "انتاج برميل خام", "oil"),
        ("q03", "تضخم اقتصاد", "economy"),
        ("q04", "سعرة حرارية حمية", "food"),
        ("q05", "علاج مستشفى", "health"),
        ("q06", "مباراة كرة قدم", "sport"),
        ("q07", "عاصفة مطر", "weather"),
        ("q08", "ذكاء بيانات شبكة", "tech"),
        ("q09", "رحلة مطار فندق", "travel"),
        ("q10", "محصول قمح ري", "agriculture"),
        ("q11", "متحف تراث فن", "culture"),
        ("q12", "سعر غذاء", "food"),  # ambiguous: price vs calorie
        ("q13", "كوانتوم", None),  # matches nothing anywhere
        ("q14", "استثمار مال نمو", "economy"),
        ("q15", "طاقة تصدير", None),  # deliberately left unjudged
    ]
    write("queries.tsv", "".join("%s\t%s\n" % (qid, text) for qid, text, _ in queries))

    # --- qrels ----------------------------------------------------------
    lines = []
    topics = list(TOPICS)
    for qid, _text, topic in queries:
        if topic is None:
            continue
        docs = ["%s/d%02d" % (topic, n) for n in range(1, 11)]
        random.shuffle(docs)
        for doc in sorted(docs[:7]):
            lines.append("%s 0 %s %d\n" % (qid, doc, random.randint(1, 2)))
        for doc in sorted(docs[7:]):
            lines.append("%s 0 %s 0\n" % (qid, doc))
        other = random.choice([t for t in topics if t != topic])
        lines.append("%s 0 %s/d%02d 0\n" % (qid, other, random.randint(1, 10)))
    write("qrels.txt", "".join(lines))

    # --- experiment config ----------------------------------------------
    write(
        "experiment.conf",
        "# settings shared by every run over the bundled corpus\n"
        "corpus = corpus\n"
        "queries = queries.tsv\n"
        "qrels = qrels.txt\n"
        "thesaurus = thesaurus.tsv\n"
        "stopwords = stopwords.txt\n"
        "d = 15\n"
        "t = 7\n"
        "k = 1000\n"
        "k_levels = 5, 10, 20, 100\n"
        "dump_expanded = true\n",
    )
    print("fixture regenerated under", HERE)


if __name__ == "__main__":
    main()
