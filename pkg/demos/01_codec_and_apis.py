"""Numbers as bit vectors, and the logic APIs that consume them.

Run: python demos/01_codec_and_apis.py
"""
import numpy as np

from estinet import numcodec
from estinet.datagen import make_taq_split
from estinet.oracle import LogicOp, adapt_selection_to_api, apply_logic_op, execute, sample_api_io

# ## Encoding a number
# A float32 is bit-cast to 32 bits, each bit repeated r times, then padded to d.

cfg = numcodec.CodecConfig(d=128, r=3)
e = numcodec.encode_number(7.0, cfg)
print("7.0 ->", e.shape, "first 12 entries:", e[:12].astype(int))
print("decoded:", numcodec.decode_number(e, cfg))

# ## Noise robustness
# Decoding takes a majority vote over the r copies of each bit, so one flipped
# copy per bit is harmless when r = 3.

rng = np.random.default_rng(0)
noisy = e.copy()
for bit in range(32):
    noisy[bit * cfg.r + rng.integers(cfg.r)] = 1 - noisy[bit * cfg.r]
print("after 32 single-copy flips:", numcodec.decode_number(noisy, cfg))

# ## NaN has one canonical code
# The NONE argument (used by MAX and MIN) is embedded as that NaN vector.

print("NaN code equals NONE slot:", np.array_equal(numcodec.encode_number(float("nan"), cfg),
                                                   numcodec.encode_nan(cfg)))

# ## The five logic APIs
# Each takes a numeric column and an argument and returns a row indicator.

col = np.array([3.0, 8.0, 5.0])
for op in LogicOp:
    print(f"{op.name:13s}", apply_logic_op(op, col, 4.0))

# ## From selections to an API call
# The network picks an op, a column and a question token; the adapter turns
# those one-hot choices into a typed call and flags interface violations.

split = make_taq_split("train", 5, seed=1)
s = split.samples[0]
table = split.tables[s.table_id]
print("\nquestion:", " ".join(s.question_tokens))
columns = [table.column_values(j) for j in range(table.n_cols)]
op_1h = np.eye(len(LogicOp))[s.gold_op]
col_1h = np.eye(table.n_cols)[s.gold_column]
arg_1h = np.zeros(len(s.question_tokens) + 1)
arg_1h[len(s.question_tokens) if s.gold_arg_token is None else s.gold_arg_token] = 1
call = adapt_selection_to_api(op_1h, col_1h, arg_1h, s.question_tokens, columns)
rows = execute(call)
print("call:", call.op.name, "arg", call.argument, "violated:", call.violated)
print("answer:", [n for n, f in zip(table.names, rows) if f], "gold:", s.gold_answer)

# ## Training pairs for an estimator
# sample_api_io draws (column, argument) -> output pairs from a value range.

cols, args, outs = sample_api_io(LogicOp.GREATER_THAN, 3, (1, 100), seed=0)
for c, a, o in zip(cols, args, outs):
    print(f"GT(col[:6]={c[:6].astype(int)}, arg={int(a)}) -> {o[:6]}")
