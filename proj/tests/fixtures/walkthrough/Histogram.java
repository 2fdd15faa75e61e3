// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package demo.stats;

public class Histogram {
  private final int[] bins;
  private final double min;
  private final double width;
  private int samples;

  public Histogram(double min, double max, int binCount) {
    this.bins = new int[binCount];
    this.min = min;
    this.width = (max - min) / binCount;
  }

  public void record(double value) {
    int bin = (int) ((value - min) / width);
    if (bin < 0) bin = 0;
    if (bin >= bins.length) bin = bins.length - 1;
    bins[bin]++;
    samples++;
  }

  public int countInBin(int bin) {
    return bins[bin];
  }

  public double mean() {
    double sum = 0;
    for (int b = 0; b < bins.length; b++) sum += bins[b] * (min + (b + 0.5) * width);
    return samples == 0 ? 0 : sum / samples;
  }
}
