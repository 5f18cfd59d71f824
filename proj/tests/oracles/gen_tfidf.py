"""Freezes TF-IDF weights computed by scikit-learn's TfidfTransformer.

With smooth_idf=True, sublinear_tf=False and norm="l2" it evaluates
idf = ln((1 + n) / (1 + df)) + 1 on raw counts followed by L2 normalization.
Output: tests/data/tfidf_oracle.json.
"""
import json
import random
from pathlib import Path

from sklearn.feature_extraction.text import CountVectorizer, TfidfTransformer

root = Path(__file__).resolve().parents[2]
rng = random.Random(20260412)
alphabet = [f"t{i:02d}" for i in range(20)]


def terms(doc, bigrams):
    out = []
    for sentence in doc:
        out.extend(sentence)
        if bigrams:
            out.extend(f"{a} {b}" for a, b in zip(sentence, sentence[1:]))
    return out


def random_doc(pool):
    return [[rng.choice(pool) for _ in range(rng.randint(1, 6))] for _ in range(rng.randint(1, 3))]


cases = []
while len(cases) < 250:
    n_terms = rng.randint(1, 20)
    pool = rng.sample(alphabet, n_terms)
    docs = [random_doc(pool) for _ in range(rng.randint(1, 5))]
    bigrams = rng.random() < 0.3
    query_pool = pool + ["zz_oov"]
    queries = docs + [random_doc(query_pool)]
    cv = CountVectorizer(analyzer=lambda d: terms(d, bigrams))
    counts = cv.fit_transform(docs)
    tf = TfidfTransformer(smooth_idf=True, sublinear_tf=False, norm="l2").fit(counts)
    weights = tf.transform(cv.transform(queries)).toarray()
    names = cv.get_feature_names_out()
    expected = [
        {str(names[j]): float(row[j]) for j in range(len(names)) if row[j] != 0.0}
        for row in weights
    ]
    cases.append({"ngram_mode": "unigram+bigram" if bigrams else "unigram",
                  "docs": docs, "queries": queries, "expected": expected})

out = root / "tests" / "data" / "tfidf_oracle.json"
out.write_text(json.dumps(cases, indent=None, separators=(",", ":")) + "\n")
print(len(cases), "cases")
