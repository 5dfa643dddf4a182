class S59 extends Abstract12 {
  void enter() {
    try {
      new S16();
      try {
        new S60();
      } catch (TimeoutException e) {
        if (x6 > 0) {
          new S61();
        } else {
          new S25();
          new S97();
          new State();
        }
        send("msg17");
        new S51();
        switch (event) {
          case EV1758:
            new S7();
            break;
        }
      }
      try {
        log("note");
      } catch (IOException e) {
        send("msg12");
      }
    } catch (IOException e) {
      new S31();
    }
    switch (event) {
      case EV1759:
        try {
          send("msg5");
          try {
            send("msg17");
            new S79();
            send("msg8");
            new S67();
          } catch (TimeoutException e) {
            new S80();
            send("msg18");
            new S35();
          }
          new S37();
        } catch (TimeoutException e) {
          log("note");
          new S1();
          try {
            send("msg3");
            new S51();
            new S30();
          } catch (IOException e) {
            new S21();
            send("msg14");
          } catch (IllegalStateException e) {
            new S25();
            send("msg6");
          }
          send("msg19");
        }
        send("msg6");
        new S12();
        send("msg9");
        break;
      case EV1760:
        send("msg10");
        try {
          try {
            send("msg19");
            new S38();
          } catch (IOException e) {
            send("msg6");
            send("msg8");
            new Helper();
            new S84();
          } catch (IllegalStateException e) {
            send("msg4");
            new S44();
            new S60();
          }
          send("msg18");
          send("msg11");
        } catch (TimeoutException e) {
          new S9();
          switch (event) {
            case EV1761:
              send("msg15");
              send("msg6");
              new State();
              new S17();
              break;
          }
          log("note");
        }
        send("msg6");
        break;
    }
    if (x1 > 0) {
      if (x5 > 0) {
        send("msg9");
        send("msg18");
      }
      if (x2 > 0) {
        new S59();
      }
      if (x8 > 0) {
        switch (event) {
          case EV1762:
            new S98();
            new S20();
            log("note");
            new State();
            break;
        }
        send("msg0");
        if (x9 > 0) {
          new S74();
          log("note");
          send("msg17");
          new S91();
        } else {
          new S49();
          send("msg18");
        }
      } else {
        switch (event) {
          case EV1763:
            new S85();
            send("msg8");
            new S54();
            new S30();
            break;
          case EV1764:
            new S49();
            new S42();
            send("msg14");
            new S64();
            break;
          case EV1765:
            new S30();
            log("note");
            send("msg13");
            break;
        }
        new S81();
        log("note");
        new S72();
      }
    }
  }
  void exit() {
    new S90();
    send("msg2");
    send("msg9");
    new S28();
  }
  void handle() {
    send("msg3");
    send("msg5");
  }
  void tick() {
    new S76();
    if (x5 > 0) {
      send("msg14");
      new S35();
      send("msg0");
      new S13();
    }
  }
  void reset() {
    if (x9 > 0) {
      log("note");
      switch (event) {
        case EV1766:
          send("msg4");
          send("msg5");
          switch (event) {
            case EV1767:
              new S59();
              new S72();
              break;
            case EV1768:
              send("msg6");
              send("msg14");
              log("note");
              break;
          }
          send("msg3");
          break;
        case EV1769:
          log("note");
          break;
        case EV1770:
          new S28();
          send("msg19");
          switch (event) {
            case EV1771:
              new S2();
              send("msg17");
              new S24();
              break;
            case EV1772:
              new S59();
              break;
          }
          send("msg11");
          break;
      }
      send("msg16");
      new S3();
    } else {
      switch (event) {
        case EV1773:
          switch (event) {
            case EV1774:
              send("msg1");
              send("msg5");
              log("note");
              break;
            case EV1775:
              send("msg11");
              break;
            case EV1776:
              new S37();
              send("msg15");
              new S99();
              send("msg8");
              break;
          }
          new Helper();
          new S89();
          break;
        case EV1777:
          new S31();
          break;
      }
      send("msg5");
      send("msg9");
      new S67();
    }
    try {
      switch (event) {
        case EV1778:
          try {
            new S66();
            send("msg19");
            new S56();
            log("note");
          } catch (TimeoutException e) {
            new S19();
            send("msg11");
            new S34();
          }
          send("msg5");
          if (x1 > 0) {
            new S65();
            new S15();
            send("msg19");
            new S43();
          }
          break;
        case EV1779:
          send("msg7");
          try {
            send("msg5");
          } catch (IOException e) {
            send("msg0");
            send("msg17");
            new S99();
            new S93();
          } catch (IOException e) {
            new S45();
            send("msg5");
            new S4();
          }
          send("msg12");
          log("note");
          break;
        case EV1780:
          new S94();
          break;
      }
      try {
        if (x0 > 0) {
          new S20();
        } else {
          new Helper();
          new S65();
          new S30();
          send("msg11");
        }
        new S70();
        if (x4 > 0) {
          new S25();
          send("msg7");
          new S80();
        } else {
          new S93();
        }
        log("note");
      } catch (IllegalStateException e) {
        send("msg7");
        if (x5 > 0) {
          new S36();
          new S98();
          send("msg3");
          send("msg16");
        } else {
          send("msg15");
          new S63();
        }
        new Helper();
      } catch (IllegalStateException e) {
        if (x7 > 0) {
          new S64();
          send("msg0");
          new S8();
        }
        try {
          log("note");
          log("note");
          new S15();
        } catch (IOException e) {
          send("msg2");
          send("msg12");
        } finally {
          send("msg2");
          send("msg0");
          send("msg5");
        }
        send("msg5");
      }
      new S29();
      try {
        new S15();
      } finally {
        if (x0 > 0) {
          new S98();
          send("msg2");
          new S86();
          send("msg18");
        }
        log("note");
        send("msg0");
      }
    } catch (IOException e) {
      send("msg18");
      new S8();
      if (x0 > 0) {
        log("note");
      }
    } finally {
      new S76();
      new S99();
    }
    log("note");
    switch (event) {
      case EV1781:
        switch (event) {
          case EV1782:
            new State();
            log("note");
            if (x6 > 0) {
              send("msg19");
              new S75();
              send("msg19");
            }
            break;
          case EV1783:
            if (x5 > 0) {
              new S54();
              new S33();
            } else {
              send("msg0");
            }
            switch (event) {
              case EV1784:
                new S48();
                new S58();
                new S42();
                new S36();
                break;
              case EV1785:
                new S95();
                new S15();
                send("msg14");
                break;
            }
            new S15();
            send("msg13");
            break;
          case EV1786:
            new S61();
            break;
        }
        break;
    }
  }
  public void open() {
    switch (event) {
      case EV1787:
        new S39();
        new State();
        break;
      case EV1788:
        try {
          new S75();
          new S47();
          send("msg16");
          log("note");
        } catch (IOException e) {
          try {
            new S86();
            send("msg15");
            log("note");
            log("note");
          } catch (IOException e) {
            new S48();
            new S84();
            new S22();
          }
          send("msg15");
          send("msg4");
        } catch (IllegalStateException e) {
          if (x7 > 0) {
            new S35();
            log("note");
            log("note");
          }
          switch (event) {
            case EV1789:
              new S11();
              break;
          }
        }
        new S51();
        log("note");
        switch (event) {
          case EV1790:
            if (x3 > 0) {
              log("note");
              send("msg14");
              new S62();
              new S34();
            } else {
              send("msg6");
              send("msg15");
              new S1();
            }
            break;
          case EV1791:
            send("msg11");
            send("msg19");
            new S94();
            break;
        }
        break;
    }
    log("note");
    send("msg13");
    switch (event) {
      case EV1792:
        send("msg13");
        break;
      case EV1793:
        new S94();
        new S37();
        new S45();
        break;
      case EV1794:
        log("note");
        log("note");
        break;
    }
  }
  void close() {
    new S83();
    log("note");
  }
  void start() {
    new S86();
    new S38();
    switch (event) {
      case EV1795:
        new S32();
        break;
      case EV1796:
        new S8();
        send("msg10");
        switch (event) {
          case EV1797:
            try {
              log("note");
            } catch (IOException e) {
              new S8();
              send("msg13");
            } catch (TimeoutException e) {
              send("msg8");
            }
            new S1();
            if (x4 > 0) {
              send("msg12");
              new S31();
              new S67();
              log("note");
            }
            break;
          case EV1798:
            switch (event) {
              case EV1799:
                new S98();
                log("note");
                break;
              case EV1800:
                new S73();
                send("msg4");
                send("msg18");
                break;
            }
            new S42();
            switch (event) {
              case EV1801:
                send("msg3");
                send("msg9");
                break;
            }
            switch (event) {
              case EV1802:
                send("msg5");
                new S62();
                new Helper();
                new Helper();
                break;
            }
            break;
          case EV1803:
            try {
              send("msg4");
              new S100();
              send("msg16");
              send("msg1");
            } finally {
              send("msg3");
            }
            break;
        }
        break;
      case EV1804:
        if (x2 > 0) {
          send("msg12");
          if (x6 > 0) {
            send("msg12");
          } else {
            send("msg9");
            new S94();
            new S80();
            send("msg9");
          }
          new S34();
        }
        new S78();
        send("msg4");
        break;
    }
    send("msg4");
  }
  public void stop() {
    new S48();
    send("msg8");
    switch (event) {
      case EV1805:
        send("msg18");
        send("msg7");
        log("note");
        new State();
        break;
      case EV1806:
        new S63();
        send("msg12");
        new S48();
        new S85();
        break;
    }
  }
  void pause() {
    send("msg3");
    new State();
    new S30();
    try {
      log("note");
      new S87();
      new S90();
    } catch (TimeoutException e) {
      new State();
      try {
        send("msg5");
        switch (event) {
          case EV1807:
            new State();
            send("msg16");
            break;
        }
        try {
          send("msg3");
          new S5();
          new S31();
          new S11();
        } catch (IllegalStateException e) {
          send("msg3");
          send("msg8");
          new S18();
          send("msg2");
        } finally {
          send("msg12");
        }
      } finally {
        new S60();
        if (x3 > 0) {
          new S100();
          new S93();
        } else {
          send("msg17");
          send("msg11");
        }
        new S48();
        send("msg15");
      }
      send("msg6");
    }
  }
}
