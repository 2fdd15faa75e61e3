// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package demo.text;

public class Tokenizer {
  private final String input;
  private int position;

  public Tokenizer(String input) {
    this.input = input;
  }

  public boolean hasMoreTokens() {
    skipWhitespace();
    return position < input.length();
  }

  public String nextToken() {
    skipWhitespace();
    int start = position;
    while (position < input.length() && !Character.isWhitespace(input.charAt(position))) position++;
    return input.substring(start, position);
  }

  private void skipWhitespace() {
    while (position < input.length() && Character.isWhitespace(input.charAt(position))) position++;
  }
}
