// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package modern.security;

public class RunningDigest {
  private long bytesSeen;
  private long sum;

  public RunningDigest() {
    reset();
  }

  public void reset() {
    sum = 1;
    bytesSeen = 0;
  }

  public long getLength() {
    return bytesSeen;
  }

  public void update(byte[] b, int off, int len) {
    for (int i = off; i < off + len; i++) update(b[i]);
  }

  public void update(int b) {
    sum = (sum + (b & 0xff)) % 65521;
    bytesSeen++;
  }

  public long getValue() {
    return sum;
  }
}
