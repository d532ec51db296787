#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.


import re
import math
import numpy as np


class Util:

    lossQuadratic = "quadratic"
    lossLog = "log"
    lossList = [lossQuadratic, lossLog]

    baseNatural = "natural"
    baseTwo = "two"
    baseAliases = {
        "natural": baseNatural,
        "e": baseNatural,
        "nat": baseNatural,
        "two": baseTwo,
        "2": baseTwo,
        "bit": baseTwo,
    }

    measureEpsilon = "epsilon"
    measureLog2Ratio = "log2-ratio"
    measureList = [measureEpsilon, measureLog2Ratio]

    stderrBatchMeans = "batch-means"
    stderrIid = "iid"
    stderrList = [stderrBatchMeans, stderrIid]

    halfLog2PiE = 0.5 * math.log(2 * math.pi * math.e)

    @staticmethod
    def normalizeBase(base):
        try:
            return Util.baseAliases[str(base).lower()]
        except KeyError:
            raise ValueError("unknown logarithm base \"%s\"" % (base))

    @staticmethod
    def natsToBase(value, base):
        # all entropies are computed in nats, conversion happens at the boundary
        if Util.normalizeBase(base) == Util.baseTwo:
            return value / math.log(2)
        return value

    @staticmethod
    def gaussianEntropy(variance, base):
        return Util.natsToBase(0.5 * math.log(variance) + Util.halfLog2PiE, base)

    @staticmethod
    def formatFloat(value):
        # "+ 0.0" turns -0.0 into 0.0
        return "%.17g" % (value + 0.0)

    @staticmethod
    def parseIntList(text):
        """Parse "a..b", "a,b,c" or a single integer into a sorted list without duplicates."""
        text = text.strip()
        m = re.fullmatch("(\\d+)\\s*\\.\\.\\s*(\\d+)", text)
        if m is not None:
            first, last = int(m.group(1)), int(m.group(2))
            if first > last:
                raise ValueError("empty range \"%s\"" % (text))
            return list(range(first, last + 1))
        if re.fullmatch("\\d+(\\s*,\\s*\\d+)*", text) is not None:
            return sorted(set(int(x) for x in text.split(",")))
        raise ValueError("can not parse integer list \"%s\"" % (text))

    @staticmethod
    def iidStderr(values):
        values = np.asarray(values, dtype=float)
        return float(np.std(values, ddof=1) / math.sqrt(values.size))

    @staticmethod
    def batchMeansStderr(values, nBatches=100):
        # non-overlapping batch means; trailing samples that do not fill a batch are dropped
        values = np.asarray(values, dtype=float)
        nBatches = min(nBatches, values.size // 10)
        if nBatches < 2:
            return Util.iidStderr(values)
        batchSize = values.size // nBatches
        means = values[:nBatches * batchSize].reshape(nBatches, batchSize).mean(axis=1)
        return float(np.std(means, ddof=1) / math.sqrt(nBatches))
