class S63 extends Abstract7 {
  void enter() {
    new S68();
    send("msg3");
  }
  void exit() {
    try {
      try {
        try {
          new S12();
          new S35();
        } catch (IllegalStateException e) {
          send("msg4");
          send("msg12");
        } finally {
          send("msg8");
          log("note");
          send("msg10");
          send("msg15");
        }
        new S81();
        new S32();
        new S49();
      } catch (IllegalStateException e) {
        try {
          new S39();
          send("msg2");
          send("msg13");
        } catch (IllegalStateException e) {
          send("msg0");
          new S52();
          new S51();
          new S22();
        }
        log("note");
      } catch (IllegalStateException e) {
        if (x5 > 0) {
          new Helper();
          new S7();
        } else {
          new Helper();
          send("msg12");
          new S22();
        }
        new S25();
      }
      new S47();
      new S54();
      send("msg11");
    } catch (IOException e) {
      new Helper();
      log("note");
      if (x0 > 0) {
        new S75();
        try {
          new S45();
        } catch (TimeoutException e) {
          log("note");
        } catch (IOException e) {
          new S93();
          send("msg4");
        }
      }
      new S71();
    } finally {
      if (x9 > 0) {
        send("msg16");
        new S72();
        new S9();
      }
      send("msg19");
      if (x2 > 0) {
        log("note");
        send("msg16");
        send("msg1");
      } else {
        new S51();
        switch (event) {
          case EV1868:
            new S51();
            send("msg9");
            break;
        }
      }
      new S24();
    }
    new S86();
    if (x0 > 0) {
      send("msg7");
      new S66();
      send("msg4");
      send("msg4");
    }
    if (x8 > 0) {
      new S13();
    }
  }
  public void handle() {
    try {
      new State();
      log("note");
      log("note");
      new S70();
    } catch (TimeoutException e) {
      try {
        try {
          new State();
          new S35();
          new S64();
          new S27();
        } catch (TimeoutException e) {
          new S26();
          new S91();
        } finally {
          send("msg11");
        }
        new S66();
        log("note");
      } finally {
        if (x1 > 0) {
          send("msg1");
          send("msg13");
          send("msg6");
        }
      }
      switch (event) {
        case EV1869:
          if (x6 > 0) {
            send("msg16");
            send("msg9");
          } else {
            new S29();
            send("msg4");
            log("note");
          }
          if (x2 > 0) {
            send("msg12");
          }
          break;
      }
    } catch (IOException e) {
      new S84();
      if (x8 > 0) {
        try {
          new State();
          log("note");
          new S89();
          new S13();
        } catch (IOException e) {
          new S63();
          send("msg4");
          new S30();
          new S47();
        } catch (IOException e) {
          new S96();
          send("msg17");
          log("note");
        }
        new State();
        try {
          send("msg13");
          send("msg7");
          log("note");
          send("msg11");
        } catch (TimeoutException e) {
          new S84();
          send("msg0");
          new S97();
        }
      } else {
        new State();
      }
      send("msg1");
    }
    new S23();
    send("msg7");
  }
  void tick() {
    send("msg5");
    send("msg8");
    try {
      new Helper();
      send("msg17");
      send("msg12");
    } catch (IOException e) {
      new S92();
    } catch (IllegalStateException e) {
      try {
        if (x1 > 0) {
          new S94();
        } else {
          new S75();
        }
        send("msg4");
        log("note");
        new S31();
      } catch (TimeoutException e) {
        new S56();
        new S14();
      } finally {
        switch (event) {
          case EV1870:
            new S6();
            send("msg18");
            break;
          case EV1871:
            new S99();
            break;
        }
        send("msg19");
        send("msg11");
        new S97();
      }
      new S22();
    }
  }
  void reset() {
    try {
      new S14();
      new Helper();
    } catch (IOException e) {
      send("msg2");
    }
    new State();
    try {
      log("note");
    } catch (TimeoutException e) {
      send("msg19");
      new S56();
      log("note");
      if (x4 > 0) {
        send("msg7");
        switch (event) {
          case EV1872:
            new State();
            new S88();
            log("note");
            log("note");
            break;
          case EV1873:
            send("msg3");
            new S66();
            new S91();
            new S18();
            break;
          case EV1874:
            send("msg19");
            send("msg13");
            break;
        }
        if (x1 > 0) {
          new S59();
          log("note");
          new S67();
          new S28();
        } else {
          new S89();
          send("msg1");
          send("msg16");
        }
        new S81();
      }
    } finally {
      new S42();
    }
    try {
      try {
        send("msg4");
        log("note");
        new S1();
      } catch (IllegalStateException e) {
        new S11();
        new S2();
        new S44();
      } catch (TimeoutException e) {
        new S76();
        send("msg15");
        new Helper();
        send("msg3");
      }
      log("note");
      log("note");
    } finally {
      new S75();
    }
  }
  public void open() {
    if (x9 > 0) {
      new S91();
      try {
        new S20();
        switch (event) {
          case EV1875:
            new S66();
            new S72();
            break;
          case EV1876:
            send("msg14");
            new S5();
            send("msg14");
            break;
        }
        send("msg11");
      } finally {
        try {
          send("msg11");
          new S100();
          send("msg16");
        } finally {
          send("msg2");
        }
        new S14();
      }
      new S47();
    }
    switch (event) {
      case EV1877:
        log("note");
        new S52();
        try {
          if (x0 > 0) {
            new S36();
            send("msg16");
            new S45();
            log("note");
          } else {
            send("msg15");
            new S37();
            new S14();
          }
        } catch (TimeoutException e) {
          new S20();
          send("msg5");
          try {
            log("note");
            send("msg19");
            log("note");
            new S11();
          } finally {
            new State();
            send("msg6");
            log("note");
          }
        } finally {
          try {
            send("msg18");
          } finally {
            new S33();
            send("msg8");
          }
        }
        break;
    }
    try {
      send("msg15");
    } catch (TimeoutException e) {
      send("msg16");
      switch (event) {
        case EV1878:
          if (x8 > 0) {
            new S29();
            new S19();
          }
          switch (event) {
            case EV1879:
              send("msg3");
              send("msg13");
              new S19();
              break;
          }
          break;
      }
      try {
        new S10();
        send("msg19");
        new S65();
        new S69();
      } finally {
        send("msg16");
        try {
          send("msg4");
          new S80();
          new State();
          send("msg3");
        } catch (TimeoutException e) {
          new S69();
          new S94();
          send("msg10");
        } finally {
          new S47();
          send("msg10");
        }
      }
    }
    send("msg16");
  }
  void close() {
    new Helper();
    if (x0 > 0) {
      new S100();
      if (x7 > 0) {
        new S39();
        send("msg3");
        new S88();
      } else {
        try {
          new S80();
          new S43();
          new S41();
        } catch (IOException e) {
          send("msg11");
          new S33();
        }
        if (x9 > 0) {
          send("msg18");
        } else {
          send("msg16");
          send("msg3");
          new S37();
        }
        switch (event) {
          case EV1880:
            new S85();
            send("msg9");
            break;
        }
        send("msg8");
      }
    } else {
      try {
        send("msg14");
        new S96();
        new S42();
        send("msg8");
      } finally {
        if (x8 > 0) {
          send("msg3");
          log("note");
          new S68();
          new S92();
        } else {
          new S24();
        }
        log("note");
        try {
          send("msg13");
        } catch (TimeoutException e) {
          new S35();
          new S73();
          new S26();
          send("msg13");
        } finally {
          log("note");
          new S20();
        }
      }
      new Helper();
    }
  }
  void start() {
    if (x9 > 0) {
      if (x7 > 0) {
        try {
          send("msg1");
          new S12();
          new S20();
        } catch (IllegalStateException e) {
          send("msg15");
          new State();
        }
        send("msg10");
        new S10();
        if (x7 > 0) {
          new S70();
          new S84();
          log("note");
        }
      }
      try {
        send("msg8");
        switch (event) {
          case EV1881:
            send("msg7");
            send("msg16");
            new S18();
            send("msg9");
            break;
          case EV1882:
            new S38();
            log("note");
            new S14();
            break;
        }
      } catch (IllegalStateException e) {
        if (x2 > 0) {
          send("msg12");
          send("msg15");
          new S52();
        }
        new S7();
        send("msg8");
        switch (event) {
          case EV1883:
            send("msg17");
            break;
          case EV1884:
            new Helper();
            new S55();
            new S25();
            break;
        }
      }
      if (x3 > 0) {
        new S94();
        send("msg18");
        send("msg8");
      } else {
        if (x6 > 0) {
          new S31();
          new S24();
        } else {
          new S53();
          new S66();
          new S26();
        }
        new S4();
      }
    }
    send("msg19");
    send("msg12");
  }
  void stop() {
    try {
      new S1();
    } catch (TimeoutException e) {
      try {
        if (x3 > 0) {
          send("msg12");
          log("note");
        } else {
          send("msg15");
          send("msg12");
          new S8();
          new S56();
        }
        send("msg7");
        switch (event) {
          case EV1885:
            log("note");
            break;
        }
      } finally {
        switch (event) {
          case EV1886:
            new S96();
            log("note");
            break;
        }
      }
      log("note");
    }
    try {
      send("msg13");
      try {
        send("msg7");
        new S3();
        new Helper();
        switch (event) {
          case EV1887:
            new Helper();
            new S29();
            break;
        }
      } catch (IllegalStateException e) {
        new S14();
        try {
          new S9();
          new Helper();
        } finally {
          new S29();
          new S85();
          new S94();
        }
        new S56();
      }
      new S40();
      if (x8 > 0) {
        new S1();
        if (x3 > 0) {
          send("msg12");
          new S77();
          send("msg7");
        } else {
          new S62();
        }
        new S79();
        new S27();
      }
    } catch (TimeoutException e) {
      log("note");
      try {
        send("msg1");
        send("msg5");
        send("msg11");
      } catch (IllegalStateException e) {
        if (x0 > 0) {
          log("note");
          send("msg19");
          new Helper();
        }
        switch (event) {
          case EV1888:
            new S92();
            new S25();
            log("note");
            break;
          case EV1889:
            new S98();
            new S77();
            new S28();
            new S78();
            break;
        }
        new S70();
        new S63();
      }
      new S90();
      new S43();
    }
    send("msg19");
    new S6();
  }
  public void pause() {
    new S58();
  }
}
