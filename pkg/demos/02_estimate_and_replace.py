"""Estimate and replace on a small table-QA set.

Pretrain one estimator per logic API, train the network with online-pretraining,
then compare test mode (estimators in place) with inference mode (real APIs).

Run: python demos/02_estimate_and_replace.py [--train 2000] [--epochs 10]
"""
import argparse
import logging
import tempfile
from pathlib import Path

import torch

from estinet import datagen as g
from estinet import model as M
from estinet.batching import make_batcher
from estinet.evalkit import EvalMode, evaluate
from estinet.trainkit import Hyperparams, build_model, final_evaluation, pretrain_all, run_training

p = argparse.ArgumentParser()
p.add_argument("--train", type=int, default=2000)
p.add_argument("--test", type=int, default=300)
p.add_argument("--epochs", type=int, default=10)
p.add_argument("--pretrain-samples", type=int, default=10000)
p.add_argument("--seed", type=int, default=0)
args = p.parse_args()
logging.basicConfig(level=logging.WARNING)

# ## Data
# Train tables hold values in [1, 100], test tables in [300, 400].

train = g.make_taq_split("train", args.train, seed=args.seed)
test = g.make_taq_split("test", args.test, seed=args.seed)
train.vocabulary = test.vocabulary = g.merge_vocabularies(train.vocabulary, test.vocabulary)
print("example:", " ".join(train.samples[0].question_tokens))

cfg = M.EstiNetConfig(vocab=train.vocabulary, d=128, d_rnn=128, r=3, esti=M.EstiLayerConfig(1, 4, 256))
hp = Hyperparams(epochs=args.epochs, seed=args.seed, pretrain_samples=args.pretrain_samples,
                 pretrain_epochs=5, pretrain_threshold=0.95)

# ## Step 1: fit each estimator to its API
# Pretraining only sees API input/output pairs, never questions.

net = build_model(cfg, args.seed)
reports = pretrain_all(net, hp)
for name, r in reports.items():
    print(f"pretrained {name:13s} elementwise {r.accuracy:.4f} exact-match {r.exact_match:.3f}")
ckpt_dir = Path(tempfile.mkdtemp())
pre = {op.api_name: ckpt_dir / f"{op.api_name}.pt" for op in net.ops}
for op in net.ops:
    M.save_estilayer(net, op, pre[op.api_name])

# ## Step 2: train the whole network
# Task loss plus online losses, whose labels come from calling the real API on
# the network's own hard selections.


def show(rec, model, opt):
    sel = rec["train"]["selector_accuracy"]
    print(f"epoch {rec['epoch']:2d}  train {rec['train']['task_accuracy']:.3f}  "
          f"test {rec['test']['task_accuracy']:.3f}  inference {rec['inference']['task_accuracy']:.3f}  "
          f"selectors op {sel['op']:.2f} col {sel['col']:.2f} arg {sel['arg']:.2f}  flagged {rec['flagged']}")


res = run_training("online-pretraining", train, hp, cfg, test, pretrained=pre, on_epoch=show)

# ## Step 3: replace
# Inference swaps every estimator for the real API.  Test-range values lie
# outside what the estimators saw, so only the replaced model generalizes.

final = final_evaluation(res.model, train, test)
print({k: round(v["task_accuracy"], 3) for k, v in final.items()})

batcher = make_batcher("taq", res.model.embeddings.index, test.tables, cfg.codec)
s = test.samples[0]
with torch.no_grad():
    out = res.model(batcher([s]), selection="hard", esti_mode="external")
call = out.calls[0]
table = test.tables[s.table_id]
print("\nquestion:", " ".join(s.question_tokens))
print("selected:", call.op.name, "column", table.column_names[out.selections['col'].index[0]],
      "argument", call.argument)
print("answer:", [n for n, f in zip(table.names, out.rows[0].tolist()) if f], "gold:", s.gold_answer)
print("inference report:", evaluate(res.model, batcher, test.samples, EvalMode.INFERENCE).task_accuracy)
