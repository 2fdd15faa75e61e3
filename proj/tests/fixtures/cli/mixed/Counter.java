// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package demo.tally;

public class Counter {
  private int count;
  private int step = 1;
  private int floor;

  public void increment() {
    count = count + step;
  }

  public void reset() {
    count = floor;
  }

  public int current() {
    return count;
  }
}
