"""Less data: plain training vs online training on two-number comparisons.

Plain training has to learn the comparison itself from the labels; online
training learns only which numbers to hand to the real comparison API.

Run: python demos/03_less_data.py [--train 250] [--epochs 60]
"""
import argparse
import logging

from estinet import datagen as g
from estinet import model as M
from estinet.runner import headline
from estinet.trainkit import Hyperparams, final_evaluation, run_training

p = argparse.ArgumentParser()
p.add_argument("--train", type=int, default=250)
p.add_argument("--test", type=int, default=1000)
p.add_argument("--epochs", type=int, default=60)
p.add_argument("--seed", type=int, default=0)
args = p.parse_args()
logging.basicConfig(level=logging.WARNING)

# ## Data
# Ten templates; values drawn with standard deviation 1e5.

train = g.make_lwp_split("train", args.train, seed=args.seed)
test = g.make_lwp_split("test", args.test, seed=args.seed + 1_000_000)
train.vocabulary = test.vocabulary = g.merge_vocabularies(train.vocabulary, test.vocabulary)
for s in train.samples[:3]:
    print(" ".join(s.question_tokens), "->", s.gold_label)

cfg = M.EstiNetConfig(task="lwp", vocab=train.vocabulary, d=128, d_rnn=128, r=3,
                      esti=M.EstiLayerConfig(1, 4, 256))
hp = Hyperparams(epochs=args.epochs, seed=args.seed)

# ## Train both procedures on the same split
# Plain is scored with its estimator in place (it never learns an API
# interface); online is scored with the real API swapped in.

scores = {}
for proc in ("plain", "online"):
    res = run_training(proc, train, hp, cfg, test)
    final = final_evaluation(res.model, train, test)
    scores[proc] = headline(final, proc)
    print(f"{proc:7s} train {final['train']['task_accuracy']:.3f}  test {final['test']['task_accuracy']:.3f}  "
          f"inference {final['inference']['task_accuracy']:.3f}")

print(f"\n{args.train} training questions: plain {scores['plain']:.3f} vs online {scores['online']:.3f}")
