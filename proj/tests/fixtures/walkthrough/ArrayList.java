// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package java.util;

public class ArrayList<E> {
  transient Object[] elementData;
  int size;

  public boolean contains(Object o) {
    return indexOf(o) >= 0;
  }

  public int indexOf(Object o) {
    for (int i = 0; i < size; i++)
      if (o == elementData[i]) return i;
    return -1;
  }

  public E set(int i, E element) {
    Objects.checkIndex(i, size);
    E old = elementData(i);
    elementData[i] = element;
    return old;
  }
}
