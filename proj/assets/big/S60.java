class S60 extends Abstract12 {
  public void enter() {
    try {
      try {
        send("msg1");
        send("msg9");
      } catch (IOException e) {
        new Helper();
        new S49();
        send("msg14");
        new S29();
      } catch (IOException e) {
        try {
          send("msg17");
        } catch (IOException e) {
          new S64();
        } catch (TimeoutException e) {
          send("msg7");
          log("note");
          send("msg14");
          new S98();
        }
      }
    } catch (IOException e) {
      new S12();
    }
    try {
      if (x0 > 0) {
        new S89();
        switch (event) {
          case EV1808:
            new S15();
            break;
          case EV1809:
            new S68();
            new S66();
            new S85();
            break;
          case EV1810:
            send("msg4");
            send("msg4");
            new S68();
            break;
        }
        if (x7 > 0) {
          send("msg19");
          send("msg14");
        } else {
          new S51();
          new S12();
        }
      } else {
        new S3();
        try {
          send("msg13");
        } catch (TimeoutException e) {
          log("note");
          send("msg3");
          send("msg15");
          send("msg9");
        }
        new S66();
      }
      new S27();
      send("msg2");
    } finally {
      send("msg12");
      if (x1 > 0) {
        new S15();
      } else {
        send("msg11");
        if (x1 > 0) {
          send("msg5");
          send("msg8");
          new S39();
          new S43();
        } else {
          send("msg9");
          new S32();
        }
      }
      try {
        new S82();
        send("msg15");
        send("msg0");
        if (x5 > 0) {
          log("note");
          send("msg9");
          new S95();
          send("msg1");
        }
      } catch (IllegalStateException e) {
        send("msg14");
      }
    }
    new S100();
  }
  void exit() {
    new S93();
    new S76();
    if (x6 > 0) {
      switch (event) {
        case EV1811:
          if (x7 > 0) {
            send("msg14");
          } else {
            new S65();
            new S53();
            send("msg11");
          }
          send("msg14");
          break;
      }
      if (x8 > 0) {
        new S24();
        send("msg8");
        send("msg5");
      } else {
        send("msg12");
      }
      log("note");
    }
    try {
      if (x3 > 0) {
        switch (event) {
          case EV1812:
            new S30();
            new S83();
            new Helper();
            new S69();
            break;
          case EV1813:
            new S24();
            new S9();
            send("msg15");
            send("msg3");
            break;
          case EV1814:
            send("msg15");
            break;
        }
      } else {
        new S13();
        new S45();
        new S65();
      }
      if (x6 > 0) {
        new S78();
        new S10();
        try {
          new S89();
          new S28();
        } catch (IOException e) {
          new S24();
          send("msg16");
          send("msg7");
        } finally {
          log("note");
        }
      } else {
        if (x8 > 0) {
          new S78();
          new Helper();
          new S58();
        } else {
          new S13();
          new S58();
        }
        new Helper();
        new S42();
        send("msg0");
      }
      new S55();
      new S76();
    } finally {
      log("note");
      if (x2 > 0) {
        new S9();
        new S9();
        new S86();
        new S17();
      } else {
        switch (event) {
          case EV1815:
            new S43();
            send("msg9");
            break;
        }
      }
      send("msg13");
    }
  }
  void handle() {
    try {
      new Helper();
      send("msg7");
      new S41();
    } catch (IOException e) {
      send("msg18");
      try {
        try {
          new S62();
          new S68();
          new S60();
          new S24();
        } finally {
          new S79();
          new S58();
          new S81();
          new S64();
        }
        try {
          send("msg18");
          new S68();
          new S33();
          new S61();
        } catch (TimeoutException e) {
          send("msg18");
          send("msg1");
          send("msg5");
          new S53();
        }
      } catch (IllegalStateException e) {
        send("msg18");
      }
    } finally {
      new S67();
      send("msg8");
      new S59();
      new S52();
    }
  }
  void tick() {
    if (x6 > 0) {
      new S25();
    }
    new S3();
    send("msg10");
  }
  void reset() {
    if (x7 > 0) {
      send("msg10");
    }
    switch (event) {
      case EV1816:
        new S52();
        new S76();
        new S68();
        send("msg1");
        break;
      case EV1817:
        if (x8 > 0) {
          new S44();
          try {
            new State();
            new S93();
          } catch (IllegalStateException e) {
            new S20();
            new S81();
          }
        } else {
          try {
            send("msg13");
            send("msg17");
            send("msg8");
          } catch (TimeoutException e) {
            log("note");
            log("note");
            send("msg11");
            new State();
          }
        }
        if (x7 > 0) {
          send("msg17");
        } else {
          send("msg18");
          new S4();
          send("msg5");
        }
        try {
          if (x0 > 0) {
            send("msg5");
            new S22();
          } else {
            log("note");
          }
          send("msg2");
          send("msg15");
          switch (event) {
            case EV1818:
              new S71();
              new S39();
              send("msg5");
              new S48();
              break;
            case EV1819:
              log("note");
              new S80();
              send("msg5");
              new S10();
              break;
            case EV1820:
              new S49();
              new S49();
              new State();
              break;
          }
        } catch (IllegalStateException e) {
          new S38();
          log("note");
          try {
            send("msg7");
          } catch (IOException e) {
            new S49();
            log("note");
          } finally {
            new S25();
            new S21();
          }
        }
        switch (event) {
          case EV1821:
            log("note");
            new S74();
            new S8();
            break;
          case EV1822:
            switch (event) {
              case EV1823:
                new S31();
                break;
              case EV1824:
                send("msg5");
                new S32();
                break;
              case EV1825:
                new S32();
                new S49();
                break;
            }
            new S90();
            break;
        }
        break;
      case EV1826:
        try {
          send("msg11");
          try {
            send("msg5");
            send("msg2");
            send("msg14");
          } catch (IOException e) {
            new S7();
            send("msg16");
            new S90();
            send("msg11");
          } catch (IllegalStateException e) {
            new S7();
            new S4();
            log("note");
          }
        } catch (IllegalStateException e) {
          send("msg5");
          new S73();
          new S15();
          send("msg3");
        } finally {
          send("msg15");
          switch (event) {
            case EV1827:
              new S95();
              break;
          }
        }
        break;
    }
    new S4();
    if (x5 > 0) {
      switch (event) {
        case EV1828:
          log("note");
          break;
      }
      switch (event) {
        case EV1829:
          new S1();
          new S5();
          break;
      }
      if (x2 > 0) {
        switch (event) {
          case EV1830:
            new S3();
            send("msg5");
            send("msg10");
            break;
          case EV1831:
            new S64();
            log("note");
            break;
          case EV1832:
            new S67();
            log("note");
            break;
        }
        log("note");
        switch (event) {
          case EV1833:
            new S27();
            break;
        }
        new S21();
      } else {
        try {
          send("msg13");
        } catch (IllegalStateException e) {
          new S30();
          new S98();
          send("msg5");
          send("msg10");
        }
      }
    }
  }
  public void open() {
    new S31();
    new S72();
    new S16();
    send("msg19");
  }
  void close() {
    new S71();
  }
  void start() {
    if (x5 > 0) {
      send("msg2");
      try {
        send("msg5");
        if (x3 > 0) {
          new S30();
          send("msg15");
        } else {
          new S99();
          new S50();
        }
        send("msg14");
        send("msg3");
      } catch (IOException e) {
        send("msg15");
        new S63();
      } catch (TimeoutException e) {
        new Helper();
        new S49();
        try {
          new S81();
          send("msg17");
          new S92();
        } catch (IllegalStateException e) {
          new S94();
        } catch (IOException e) {
          send("msg4");
          new S41();
        }
        log("note");
      }
      new S49();
    }
  }
  public void stop() {
    log("note");
    new S25();
    new S70();
    try {
      send("msg17");
      send("msg3");
    } catch (IOException e) {
      new S46();
      new S63();
      send("msg12");
      send("msg18");
    }
  }
  void pause() {
    if (x7 > 0) {
      send("msg10");
      send("msg18");
    } else {
      send("msg9");
      if (x1 > 0) {
        if (x9 > 0) {
          send("msg16");
        } else {
          new S95();
        }
        switch (event) {
          case EV1834:
            new S40();
            break;
          case EV1835:
            new S100();
            log("note");
            new S28();
            new S22();
            break;
        }
        new S50();
      }
      if (x8 > 0) {
        new S96();
      }
      send("msg7");
    }
    log("note");
    send("msg8");
  }
}
