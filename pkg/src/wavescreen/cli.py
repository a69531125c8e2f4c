"""Batch command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error. Every failure prints a
one-line diagnostic to stderr. No subcommand reads the clock or unseeded
entropy, so outputs are a pure function of inputs and flags.

File formats:
- images: PGM P2/P5, maxval 255
- CSV: dot-decimal, LF newlines, floats at 17 significant digits
- coefficients CSV: "# wavelet=<name> levels=<J> rows=<R> cols=<C>"
  metadata line, then a "level,band,row,col,value" header and one
  coefficient per line (ll rows carry level J)
- models: "WCSMODEL v1" text format
"""

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from .classifiers import LinearSVM, PNNClassifier, SelfOrganizingMap, majority_unit_labels
from .compress import compress_threshold
from .dwt import SubbandPyramid2D, wavedec2d, waverec2d
from .features import FeatureNormalizer, FeatureSpec, extract_dwt_stats, tile_image
from .model_io import load_model, save_model
from .pgm import read_pgm, write_pgm
from .pooling import info_loss_report
from .scattering import scatter2d
from .stft import stft_spectrogram
from .synth import SynthConfig, synth_tiles
from .validation import max_levels
from .wavelets import get_wavelet

USAGE_ERROR = 1
DATA_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(value):
    if value == float("inf"):
        return "inf"
    if value == float("-inf"):
        return "-inf"
    return format(float(value), ".17g")


def _read_image(path):
    return read_pgm(Path(path).read_bytes())


def _write_text(path, text):
    Path(path).write_text(text, encoding="ascii", newline="")


# ------------------------------------------------------------ CSV helpers


def _coeffs_csv(pyr, wavelet_name):
    rows, cols = pyr.original_shape
    out = io.StringIO()
    out.write(f"# wavelet={wavelet_name} levels={pyr.levels} rows={rows} cols={cols}\n")
    out.write("level,band,row,col,value\n")
    for j, (lh, hl, hh) in enumerate(pyr.bands, start=1):
        for name, band in (("lh", lh), ("hl", hl), ("hh", hh)):
            for (r, c), v in np.ndenumerate(band):
                out.write(f"{j},{name},{r},{c},{_fmt(v)}\n")
    for (r, c), v in np.ndenumerate(pyr.ll):
        out.write(f"{pyr.levels},ll,{r},{c},{_fmt(v)}\n")
    return out.getvalue()


def _parse_coeffs_csv(text):
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValueError("coefficients CSV is missing its metadata line")
    meta = dict(item.split("=", 1) for item in lines[0][2:].split())
    wavelet_name = meta["wavelet"]
    levels = int(meta["levels"])
    rows, cols = int(meta["rows"]), int(meta["cols"])
    if lines[1] != "level,band,row,col,value":
        raise ValueError("coefficients CSV has an unexpected header")
    grids = {}
    for j in range(1, levels + 1):
        for name in ("lh", "hl", "hh"):
            grids[(j, name)] = np.zeros((rows >> j, cols >> j))
    grids[(levels, "ll")] = np.zeros((rows >> levels, cols >> levels))
    for line in lines[2:]:
        if not line:
            continue
        j, name, r, c, v = line.split(",")
        grids[(int(j), name)][int(r), int(c)] = float(v)
    bands = [
        (grids[(j, "lh")], grids[(j, "hl")], grids[(j, "hh")])
        for j in range(1, levels + 1)
    ]
    pyr = SubbandPyramid2D(grids[(levels, "ll")], bands, original_shape=(rows, cols))
    return pyr, wavelet_name


def _features_csv(names, matrix):
    out = io.StringIO()
    out.write(",".join(names) + "\n")
    for row in np.atleast_2d(matrix):
        out.write(",".join(_fmt(v) for v in row) + "\n")
    return out.getvalue()


def _read_features_csv(path):
    text = Path(path).read_text(encoding="ascii")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"features CSV {path} is empty")
    names = lines[0].split(",")
    data = np.array([[float(tok) for tok in ln.split(",")] for ln in lines[1:]])
    if data.size == 0:
        raise ValueError(f"features CSV {path} has no data rows")
    if data.shape[1] != len(names):
        raise ValueError(f"features CSV {path} rows do not match its header")
    return names, data


def _read_labels_csv(path):
    text = Path(path).read_text(encoding="ascii")
    reader = csv.reader(text.splitlines())
    rows = [row for row in reader if row]
    if not rows:
        raise ValueError(f"labels CSV {path} is empty")
    header = [h.strip().lower() for h in rows[0]]
    if "label" in header:
        col = header.index("label")
        body = rows[1:]
    else:
        col = len(rows[0]) - 1
        body = rows
    try:
        return np.array([int(row[col]) for row in body], dtype=np.int64)
    except ValueError:
        raise ValueError(f"labels CSV {path} has a non-integer label")


def _read_signal_csv(path):
    lines = Path(path).read_text(encoding="ascii").splitlines()
    values = []
    for i, ln in enumerate(lines):
        tok = ln.strip()
        if not tok:
            continue
        if i == 0 and tok.lower() == "value":
            continue
        values.append(float(tok))
    if len(values) < 2:
        raise ValueError(f"signal CSV {path} needs at least 2 samples")
    return np.array(values)


# ------------------------------------------------------------ subcommands


def _cmd_transform(args):
    img = _read_image(args.input)
    w = get_wavelet(args.wavelet)
    pyr = wavedec2d(img, w, args.levels)
    _write_text(args.out, _coeffs_csv(pyr, w.name))
    return 0


def _cmd_reconstruct(args):
    pyr, wavelet_name = _parse_coeffs_csv(Path(args.coeffs).read_text(encoding="ascii"))
    img = waverec2d(pyr, get_wavelet(wavelet_name))
    Path(args.out).write_bytes(write_pgm(img))
    return 0


def _cmd_compress(args):
    img = _read_image(args.input)
    w = get_wavelet(args.wavelet)
    pyr = wavedec2d(img, w, args.levels)
    thresholded, report = compress_threshold(pyr, args.keep, w)
    Path(args.out).write_bytes(write_pgm(waverec2d(thresholded, w)))
    _write_text(
        args.report,
        "kept_count,total_count,psnr\n"
        f"{report.kept_count},{report.total_count},{_fmt(report.psnr)}\n",
    )
    return 0


def _cmd_scatter(args):
    img = _read_image(args.input)
    feature = scatter2d(
        img, args.levels, wavelet=get_wavelet(args.wavelet), max_order=args.order
    )
    _write_text(args.out, _features_csv(feature.path_names(), feature.values))
    return 0


def _cmd_extract(args):
    stats = tuple(s.strip() for s in args.stats.split(",") if s.strip())
    spec = FeatureSpec(
        source="dwt-stats",
        levels=args.levels,
        stats=stats,
        normalization="zscore" if args.normalize else "none",
    )
    w = get_wavelet(args.wavelet)
    paths = sorted(Path(args.input).glob("*.pgm"))
    if not paths:
        raise ValueError(f"no .pgm files found in {args.input}")
    rows = []
    for path in paths:
        img = read_pgm(path.read_bytes())
        for tile, _ in zip(*tile_image(img, args.tile)):
            pyr = wavedec2d(tile, w, spec.levels)
            rows.append(extract_dwt_stats(pyr, spec))
    matrix = np.array(rows)
    if args.normalize:
        matrix = FeatureNormalizer().fit(matrix).transform(matrix)
    _write_text(args.out, _features_csv(spec.feature_names(), matrix))
    print(f"extracted {matrix.shape[0]} tiles x {matrix.shape[1]} features", file=sys.stderr)
    return 0


def _cmd_synth(args):
    cfg = SynthConfig(seed=args.seed, tile_size=args.tile, count_per_class=args.count)
    tiles, labels = synth_tiles(cfg)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = ["filename,label"]
    for i, (tile, label) in enumerate(zip(tiles, labels)):
        name = f"tile_{i:04d}.pgm"
        (out_dir / name).write_bytes(write_pgm(tile))
        lines.append(f"{name},{label}")
    _write_text(out_dir / "labels.csv", "\n".join(lines) + "\n")
    return 0


def _cmd_train(args):
    _, X = _read_features_csv(args.features)
    y = _read_labels_csv(args.labels)
    if y.size != X.shape[0]:
        raise ValueError(
            f"{y.size} labels for {X.shape[0]} feature rows"
        )
    if args.model == "svm":
        classes = np.unique(y)
        if classes.size != 2:
            raise ValueError(f"svm needs exactly 2 classes, got {classes.size}")
        signed = np.where(y == classes[0], -1, 1)
        model = LinearSVM(lam=args.lam, epochs=args.epochs, seed=args.seed)
        model.fit(X, signed)
        model.label_map_ = [int(classes[0]), int(classes[1])]
    elif args.model == "som":
        try:
            width, height = (int(tok) for tok in args.grid.lower().split("x"))
        except ValueError:
            raise _UsageError(f"--grid must look like WxH, got {args.grid!r}")
        model = SelfOrganizingMap(
            width=width, height=height, lr0=args.lr0, lr_final=args.lr_final,
            r0=args.r0, r_final=args.r_final, epochs=args.epochs, seed=args.seed,
        )
        model.fit(X)
        model.unit_labels_ = majority_unit_labels(model, X, y)
    else:
        model = PNNClassifier().fit(X, y)
    _write_text(args.out, save_model(model))
    return 0


def _model_predictions(model, X, sigma):
    if isinstance(model, LinearSVM):
        signed = model.predict(X)
        if getattr(model, "label_map_", None) is not None:
            neg, pos = model.label_map_
            return np.where(signed < 0, neg, pos)
        return signed
    if isinstance(model, SelfOrganizingMap):
        units = model.assign(X)
        if getattr(model, "unit_labels_", None) is not None:
            return model.unit_labels_[units]
        return units
    return model.predict(X, sigma=sigma)


def _cmd_predict(args):
    model = load_model(Path(args.model).read_text(encoding="ascii"))
    _, X = _read_features_csv(args.features)
    pred = _model_predictions(model, X, args.sigma)
    _write_text(
        args.out, "prediction\n" + "".join(f"{int(p)}\n" for p in pred)
    )
    if args.labels is not None:
        y = _read_labels_csv(args.labels)
        if y.size != pred.size:
            raise ValueError(f"{y.size} labels for {pred.size} predictions")
        print(f"accuracy {np.mean(pred == y):.6f}")
    return 0


def _cmd_pool_demo(args):
    img = _read_image(args.input)
    reports = info_loss_report(img[None, :, :], get_wavelet(args.wavelet))
    lines = ["method,channels,height,width,rmse"]
    for r in reports:
        lines.append(f"{r.method},{r.channels},{r.height},{r.width},{_fmt(r.reconstruction_rmse)}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_stft(args):
    x = _read_signal_csv(args.input)
    spec = stft_spectrogram(x, args.window, args.hop, window=args.window_fn)
    out = io.StringIO()
    out.write("frame,bin,magnitude\n")
    for (f, b), v in np.ndenumerate(spec.magnitudes):
        out.write(f"{f},{b},{_fmt(v)}\n")
    _write_text(args.out, out.getvalue())
    return 0


# ------------------------------------------------------------ wiring


def build_parser():
    parser = _Parser(prog="wavescreen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="multi-level 2D DWT of a PGM image")
    p.add_argument("--input", required=True)
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("reconstruct", help="inverse DWT from a coefficients CSV")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("compress", help="threshold compression round trip")
    p.add_argument("--input", required=True)
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--keep", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("scatter", help="scattering features of a PGM image")
    p.add_argument("--input", required=True)
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--order", type=int, choices=(0, 1, 2), default=2)
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_scatter)

    p = sub.add_parser("extract", help="subband-stat features for a directory of PGMs")
    p.add_argument("--input", required=True)
    p.add_argument("--tile", type=int, required=True)
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--stats", default="energy,mean_abs,std")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("synth", help="generate the synthetic labeled tile set")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tile", type=int, default=32)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("train", help="train a classifier from feature/label CSVs")
    p.add_argument("--model", choices=("svm", "som", "pnn"), required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=0.01)
    p.add_argument("--epochs", type=int, default=20)
    p.add_argument("--grid", default="2x2")
    p.add_argument("--lr0", type=float, default=0.5)
    p.add_argument("--lr-final", type=float, default=0.05)
    p.add_argument("--r0", type=float, default=None)
    p.add_argument("--r-final", type=float, default=0.1)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("predict", help="predict from a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--labels", default=None)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("pool-demo", help="pooling information-loss report")
    p.add_argument("--input", required=True)
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_pool_demo)

    p = sub.add_parser("stft", help="spectrogram of a signal CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--hop", type=int, required=True)
    p.add_argument("--window-fn", choices=("rect", "hann"), default="rect")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_stft)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, TypeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
