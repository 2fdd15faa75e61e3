// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package legacy.security;

public class Checksum {
  private long value;
  private long length;

  public Checksum() {
    reset();
  }

  public void update(int b) {
    value = (value + (b & 0xff)) % 65521;
    length++;
  }

  public void update(byte[] b, int off, int len) {
    for (int i = off; i < off + len; i++) update(b[i]);
  }

  public long getValue() {
    return value;
  }

  public long getLength() {
    return length;
  }

  public void reset() {
    value = 1;
    length = 0;
  }
}
